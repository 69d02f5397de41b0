from dataclasses import dataclass

import numpy as np

from abel_inversion.model.mesh import Mesh


@dataclass(frozen=True, eq=False)
class QuadratureMatrix:
    """Upper-triangular generalized quadrature coefficients of one kernel.

    Row i and column j are 0-based. For the sqrt kernel row i belongs to the
    ray offset x_i and column j to the interval [r_j, r_{j+1}]. For the log
    kernel row j belongs to the radius r_j and column i to the interval
    [x_i, x_{i+1}].

    Attributes:
        entries (np.ndarray): Dense (n-1) x (n-1) coefficient matrix.
        kind (str): One of KernelKindConstant.
        mesh (Mesh): The mesh the coefficients were built from.
    """

    entries: np.ndarray
    kind: str
    mesh: Mesh

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])
