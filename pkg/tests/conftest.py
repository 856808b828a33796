import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

# Some properties walk breadth-first closures; per-example deadlines would
# only add flakiness there.
settings.register_profile(
    "rookorder",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("rookorder")
