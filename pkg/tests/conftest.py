import numpy as np
import pytest

from orienteer import PointSet, Path
from orienteer.geometry import rotate_to_axis


def random_pointset(rng, n=None, d=2, n_range=(4, 10)):
    if n is None:
        n = int(rng.integers(n_range[0], n_range[1] + 1))
    return PointSet(rng.random((n, d)))


def random_path(rng, n=None, d=2, n_range=(4, 10)):
    """Random visit order over a fresh random point set."""
    pts = random_pointset(rng, n, d, n_range)
    order = rng.permutation(pts.n)
    return Path(pts, tuple(int(i) for i in order))


def random_rotated_path(rng, n=None, d=2, n_range=(4, 10)):
    """Random path re-expressed in the frame where its endpoints sit on the
    sweep axis with the source on the left."""
    path = random_path(rng, n, d, n_range)
    rotated, _ = rotate_to_axis(path.host, path.source, path.sink)
    return Path(rotated, path.visits)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
