import numpy as np
import pytest

from abel_inversion.model.mesh import Mesh
from abel_inversion.model.phantom import Phantom
from abel_inversion.util.mesh_util import MeshUtil


@pytest.fixture
def rng():
    """Seeded generator shared by the property tests."""
    return np.random.default_rng(20240611)


@pytest.fixture
def nonuniform_mesh() -> Mesh:
    return MeshUtil.custom_mesh([0.0, 0.05, 0.2, 0.3, 0.45, 0.7, 0.8, 0.93, 1.0])


@pytest.fixture
def semicircle() -> Phantom:
    return Phantom("semicircle", 1.0, 1.0)


@pytest.fixture
def parabolic() -> Phantom:
    return Phantom("parabolic", 1.0, 1.0)


def random_mesh(rng: np.random.Generator, n: int, radius: float = 1.0) -> Mesh:
    """Nonuniform mesh with steps drawn from [0.1, 1] and scaled to radius."""
    steps = rng.uniform(0.1, 1.0, n - 1)
    nodes = np.concatenate([[0.0], np.cumsum(steps)])
    nodes *= radius / nodes[-1]
    nodes[-1] = radius
    return MeshUtil.custom_mesh(nodes)
