import sys


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    parts = name.split("_")
    if len(parts) < 3 or parts[1] != "criterion":
        return
    label = " ".join(parts[3:])
    outcome = "PASS" if report.passed else "FAIL"
    sys.stdout.write(
        "\nacceptance criterion %s (%s): %s\n" % (parts[2], label, outcome)
    )
