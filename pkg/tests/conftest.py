from pathlib import Path

import pytest
from sympy.polys.rings import PolyElement

from diagonal_invariants import get_settings
from diagonal_invariants.polycore import PolyRing
from diagonal_invariants.surfcalc import SurfaceNumerics

SURFACES: Path = Path(__file__).parent.parent / "surfaces"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    """Settings are read once per process; clear them so monkeypatched env vars take effect."""
    monkeypatch.delenv("DIAG_CACHE_DIR", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def ring3() -> PolyRing:
    return PolyRing(n=3, d=2)


@pytest.fixture
def ring2() -> PolyRing:
    return PolyRing(n=2, d=2)


@pytest.fixture
def triple_quadric(ring3: PolyRing) -> PolyElement:
    """(x2 - x1)(y3 - y1) - (y2 - y1)(x3 - x1), the quadric vanishing on all three pairwise diagonals."""
    x = {j: ring3.var(j, 1) for j in (1, 2, 3)}
    y = {j: ring3.var(j, 2) for j in (1, 2, 3)}
    return (x[2] - x[1]) * (y[3] - y[1]) - (y[2] - y[1]) * (x[3] - x[1])


@pytest.fixture
def p2() -> SurfaceNumerics:
    return SurfaceNumerics.load(SURFACES / "p2.yaml")


@pytest.fixture
def synthetic() -> SurfaceNumerics:
    return SurfaceNumerics.load(SURFACES / "synthetic.yaml")
