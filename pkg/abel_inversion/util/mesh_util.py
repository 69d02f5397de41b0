import logging
from typing import Sequence

import numpy as np

from abel_inversion.constant.solver_constant import SolverConstant
from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.exception.invalid_mesh_exception import InvalidMeshException
from abel_inversion.model.mesh import Mesh

logger = logging.getLogger(__name__)


class MeshUtil:
    @staticmethod
    def uniform_mesh(n: int, radius: float) -> Mesh:
        """Build the uniform mesh nodes[j] = j * R / (n - 1).

        Args:
            n: Number of nodes, at least 3
            radius: Outer radius R, positive

        Returns:
            Mesh: Uniform mesh on [0, R]

        Raises:
            InvalidArgumentException: If n < 3 or R <= 0
        """
        if int(n) != n or n < SolverConstant.MIN_MESH_NODES:
            raise InvalidArgumentException(
                f"Uniform mesh needs an integer n >= {SolverConstant.MIN_MESH_NODES}, got {n}"
            )
        if not np.isfinite(radius) or radius <= 0.0:
            raise InvalidArgumentException(f"Mesh radius must be positive, got {radius}")
        nodes = np.arange(int(n), dtype=float) * (float(radius) / (int(n) - 1))
        # pin the last node so that nodes[-1] == R exactly
        nodes[-1] = float(radius)
        return Mesh(nodes)

    @staticmethod
    def custom_mesh(nodes: Sequence[float]) -> Mesh:
        """Validate a user-supplied node list.

        Raises:
            InvalidMeshException: If the list is empty, too short, does not start at 0
                or is not strictly increasing
        """
        if nodes is None or len(nodes) == 0:
            raise InvalidMeshException("Mesh node list is empty")
        mesh = Mesh(np.asarray(nodes, dtype=float))
        logger.info(f"Custom mesh with {mesh.size} nodes, R = {mesh.radius}")
        return mesh
