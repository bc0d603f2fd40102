import numpy as np
import pytest

from interpfit import _backend, hermite, polyinterp, spline

_USERS = (polyinterp, hermite, spline)


@pytest.fixture(params=_backend.available())
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    k = _backend.get(request.param)
    for mod in _USERS:
        monkeypatch.setattr(mod, "kernels", k)
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20220211)


def spaced_nodes(rng, count, lo=-1.0, hi=1.0, min_gap=0.05):
    """Random sorted nodes in [lo, hi] with a minimum pairwise gap."""
    while True:
        x = np.sort(rng.uniform(lo, hi, count))
        if count < 2 or np.min(np.diff(x)) >= min_gap:
            return x
