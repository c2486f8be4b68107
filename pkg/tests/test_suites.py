import pytest

from homcut.suites import (
    SUITES,
    VerificationReport,
    format_report,
    run_suite,
)


@pytest.mark.parametrize("name,trials,max_n", [
    ("classifier", 1, 4),
    ("lemma1", 15, 9),
    ("lemma2", 15, 6),
    ("thm1", 12, 5),
    ("thm2", 8, 3),
    ("lemma34", 4, 4),
    ("lift", 4, 4),
    ("implications", 40, 5),
])
def test_small_runs_pass(name, trials, max_n):
    rep = run_suite(name, seed=3, trials=trials, max_n=max_n)
    assert rep.failed == 0, rep.failures
    assert rep.attempted == rep.passed + rep.failed + rep.skipped
    assert rep.elapsed_s >= 0


def test_reports_are_replayable():
    a = run_suite("thm1", seed=5, trials=10, max_n=5)
    b = run_suite("thm1", seed=5, trials=10, max_n=5)
    assert (a.passed, a.failed, a.skipped) == (b.passed, b.failed, b.skipped)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_format_report_mentions_counts():
    rep = VerificationReport("demo")
    rep.record_pass()
    rep.record_skip()
    text = format_report(rep)
    assert "1 passed" in text and "1 skipped" in text


def test_failure_records_carry_seeds():
    rep = VerificationReport("demo")
    rep.record_fail(trial=3, seed=[9, 3], detail="boom")
    assert rep.failures[0]["seed"] == [9, 3]
    assert not rep.ok


def test_every_suite_has_defaults():
    from homcut.suites import DEFAULTS

    assert set(DEFAULTS) == set(SUITES)
