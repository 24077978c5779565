"""Exact Hodge-number and Borel-Weil-Bott computations for Grassmannian sections."""

from .bbw import CohomologyTable, FlagAmbient, HomogeneousBundle, bbw_cohomology, snow_contributes
from .hodge import HodgePolynomial
from .sections import section_diamond
from .twisted import grassmannian_diamond, twisted_form_cohomology

__all__ = [
    "CohomologyTable",
    "FlagAmbient",
    "HodgePolynomial",
    "HomogeneousBundle",
    "bbw_cohomology",
    "grassmannian_diamond",
    "section_diamond",
    "snow_contributes",
    "twisted_form_cohomology",
]
