"""Twisted differential forms on Grassmannians.

``Omega^j`` on ``Gr(k, n)`` splits as the sum over partitions ``alpha`` of
``j`` in the ``k x (n-k)`` box of ``S_alpha U (x) S_{alpha^T} Q^*``; each
summand of ``Omega^j(-i)`` is irreducible, so its cohomology is read off
from Borel-Weil-Bott.
"""

from __future__ import annotations

from functools import lru_cache

from .bbw import CohomologyTable, FlagAmbient, HomogeneousBundle, bbw_cohomology, form_summand_weight
from .hodge import HodgePolynomial
from .partitions import box_counts, partitions_in_box


def _check_range(k: int, n: int, j: int, i: int) -> None:
    if not 0 < k < n:
        raise ValueError(f"Gr({k},{n}) needs 0 < k < n")
    if not 0 <= j <= k * (n - k):
        raise ValueError(f"form degree {j} outside [0, {k * (n - k)}]")
    if i < 0:
        raise ValueError(f"twist must be non-negative, got {i}")


def twisted_form_cohomology(k: int, n: int, j: int, i: int) -> CohomologyTable:
    """``H^*(Gr(k,n), Omega^j(-i))`` as a degree -> dimension table."""
    _check_range(k, n, j, i)
    return _twisted(k, n, j, i)


@lru_cache(maxsize=None)
def _twisted(k: int, n: int, j: int, i: int) -> CohomologyTable:
    ambient = FlagAmbient.grassmannian(k, n)
    total = CohomologyTable()
    for alpha in partitions_in_box(j, k, n - k):
        w = form_summand_weight(alpha, k, n - k, i)
        total = total + bbw_cohomology(HomogeneousBundle(ambient, w))
    return total


def euler_char_twisted(k: int, n: int, j: int, i: int) -> int:
    return twisted_form_cohomology(k, n, j, i).euler()


def grassmannian_diamond(k: int, n: int) -> HodgePolynomial:
    if not 0 < k < n:
        raise ValueError(f"Gr({k},{n}) needs 0 < k < n")
    return HodgePolynomial.from_L(box_counts(k, n - k), dim=k * (n - k))
