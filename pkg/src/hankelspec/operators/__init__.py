"""Finite realizations of Hankel operators: matrices, grid ΨDOs and Nyström matrices."""

from .equivalence import apply_hankel_via_psido, gamma_phase, inverse_modified_mellin, modified_mellin
from .hankel import HankelMatrix, build_hankel, hankel_matvec
from .nystrom import NystromHankel, build_nystrom
from .psido import GridPsiDO, build_carleman_psido, build_psido, build_sigma_psido, rolloff, standard_weight

__all__ = [
    "GridPsiDO", "HankelMatrix", "NystromHankel", "apply_hankel_via_psido", "build_carleman_psido",
    "build_hankel", "build_nystrom", "build_psido", "build_sigma_psido", "gamma_phase", "hankel_matvec",
    "inverse_modified_mellin", "modified_mellin", "rolloff", "standard_weight",
]
