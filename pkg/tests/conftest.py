import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# oracle calls make per-example timing noisy; "stress" is for occasional deep runs
settings.register_profile("default", deadline=None)
settings.register_profile("stress", deadline=None, max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
