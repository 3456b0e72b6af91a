"""Prints a one-line pass/fail verdict for each acceptance criterion."""

CRITERIA = {
    "test_criterion_1": "golden 4-element twist applies and inverts exactly",
    "test_criterion_2": "all involutive non-degenerate solutions (n <= 3) twist to the flip",
    "test_criterion_3": "twist groupoid laws (compose, invert, identity)",
    "test_criterion_4": "endo-twist counts Z2/Z3/Z4/Klein = 1/2/4/48, complete at n = 2",
    "test_criterion_5": "twist-relatedness is additive-group isomorphism",
    "test_criterion_6": "every produced twist yields a valid braided group",
    "test_criterion_7": "matched-pair theta maps induce exactly the expected twists",
    "test_criterion_8": "permutation order of r is a twist invariant",
    "test_criterion_9": "CLI round trips byte-identically and honors exit codes",
}

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name in CRITERIA:
        _results[name] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, blurb in CRITERIA.items():
        if name not in _results:
            continue
        verdict = "PASS" if _results[name] else "FAIL"
        number = name.rsplit("_", 1)[-1]
        terminalreporter.write_line(f"{verdict} criterion {number}: {blurb}")
