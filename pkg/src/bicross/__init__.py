"""Bicocycle double cross products of Lie algebras, groups and bialgebras.

Everything is exact: scalars are :class:`fractions.Fraction` and tensors are
numpy object arrays.  The submodules are

``kernel``   based spaces, multilinear map tensors, exact linear algebra
``lie``      Lie algebras from two subspaces, and back
``group``    groups from two pointed subsets, and back
``quantum``  bialgebras from two coalgebras, their duals, and back
``fixtures`` worked examples with known outcomes
``serialize``/``cli``  JSON definition files and the ``bicross`` command
"""

__version__ = "0.1.0"

from .kernel import BasedSpace, BilinearMapTensor, LinearMapTensor, SubspacePair  # noqa: E402
from .report import AxiomReport, AxiomResult, Violation  # noqa: E402

__all__ = [
    "__version__",
    "AxiomReport",
    "AxiomResult",
    "BasedSpace",
    "BilinearMapTensor",
    "LinearMapTensor",
    "SubspacePair",
    "Violation",
]
