from dataclasses import dataclass

from abel_inversion.model.mesh import Mesh
from abel_inversion.model.phantom import Phantom
from abel_inversion.model.samples import SolutionVector, SourceSamples


@dataclass(frozen=True, eq=False)
class SyntheticSample:
    """Phantom sampled on a mesh.

    Attributes:
        noise_norm (float): ||(q_noisy - q_exact) / 2||_2, the data error on the f = q / 2 scale.
    """

    phantom: Phantom
    mesh: Mesh
    k_true: SolutionVector
    q_exact: SourceSamples
    q: SourceSamples
    noise_norm: float
