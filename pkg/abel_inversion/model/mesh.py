from dataclasses import dataclass

import numpy as np

from abel_inversion.constant.solver_constant import SolverConstant
from abel_inversion.exception.invalid_mesh_exception import InvalidMeshException


@dataclass(frozen=True, eq=False)
class Mesh:
    """Coinciding node grid shared by the ray offsets x and the radii r.

    The grid runs 0 = x_1 = r_1 < ... < x_n = r_n = R. Nodes are copied into
    a read-only array on construction, so a Mesh can be shared freely.

    Attributes:
        nodes (np.ndarray): Strictly increasing node values, first node 0.
    """

    nodes: np.ndarray

    def __post_init__(self) -> None:
        nodes = np.array(self.nodes, dtype=float)
        if nodes.ndim != 1:
            raise InvalidMeshException(f"Mesh nodes must be one-dimensional, got shape {nodes.shape}")
        if nodes.size < SolverConstant.MIN_MESH_NODES:
            raise InvalidMeshException(
                f"Mesh needs at least {SolverConstant.MIN_MESH_NODES} nodes, got {nodes.size}"
            )
        if not np.all(np.isfinite(nodes)):
            raise InvalidMeshException("Mesh nodes must be finite")
        if nodes[0] != 0.0:
            raise InvalidMeshException(f"First mesh node must be 0, got {nodes[0]!r}")
        steps = np.diff(nodes)
        if np.any(steps <= 0.0):
            position = int(np.argmax(steps <= 0.0))
            raise InvalidMeshException(
                f"Mesh nodes must be strictly increasing (node {position + 1} = {nodes[position + 1]!r} "
                f"follows {nodes[position]!r})"
            )
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    @property
    def radius(self) -> float:
        return float(self.nodes[-1])

    @property
    def steps(self) -> np.ndarray:
        return np.diff(self.nodes)

    def __len__(self) -> int:
        return self.size
