"""Hodge diamonds of linear sections of Grassmannians.

For a smooth complete intersection ``X`` of ``r`` hyperplanes in ``Gr(k,n)``
the rows below the middle come from Lefschetz, the rows above from
Poincare duality, and the middle row from the Euler characteristics
``chi(Omega^p_X)``. Those are computed on the Grassmannian through the
conormal sequence and the Koszul resolution of ``O_X``:

    [Omega^p_X] = sum_j (-1)^j C(j+r-1, r-1) [Omega^{p-j}_Gr(-j)|_X]
    chi(F|_X)   = sum_s (-1)^s C(r, s) chi(F(-s))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .hodge import DiamondError, HodgePolynomial
from .twisted import euler_char_twisted, grassmannian_diamond


@lru_cache(maxsize=None)
def chi_forms_on_section(k: int, n: int, p: int, r: int = 1) -> int:
    """``chi(X, Omega^p_X)`` for ``X`` cut out by ``r`` hyperplanes."""
    D = k * (n - k)
    total = 0
    for j in range(p + 1):
        if p - j > D:
            continue
        weight = (-1) ** j * comb(j + r - 1, r - 1)
        for s in range(r + 1):
            total += weight * (-1) ** s * comb(r, s) * euler_char_twisted(k, n, p - j, j + s)
    return total


def linear_section_diamond(k: int, n: int, r: int) -> HodgePolynomial:
    """Diamond of a smooth section of ``Gr(k,n)`` by ``r`` general hyperplanes."""
    D = k * (n - k)
    if not 1 <= r <= D:
        raise ValueError(f"need 1 <= r <= {D}, got {r}")
    d = D - r
    gr = grassmannian_diamond(k, n)
    coeffs: dict[tuple[int, int], int] = {}
    for p in range(d + 1):
        if 2 * p < d:
            coeffs[(p, p)] = gr[(p, p)]
            coeffs[(d - p, d - p)] = gr[(p, p)]
    for p in range(d + 1):
        q = d - p
        chi = chi_forms_on_section(k, n, p, r)
        if p == q:
            h = (-1) ** p * chi
        else:
            h = (-1) ** q * (chi - (-1) ** p * coeffs.get((p, p), 0))
        coeffs[(p, q)] = h
    out = HodgePolynomial(coeffs, d)
    for p in range(d + 1):
        if out[(p, d - p)] != out[(d - p, p)]:
            raise DiamondError(
                f"middle row of the section of Gr({k},{n}) fails Hodge symmetry at ({p},{d - p})"
            )
    return out.check_diamond(d)


def section_diamond(k: int, n: int) -> HodgePolynomial:
    """Diamond of a smooth hyperplane section of ``Gr(k, n)``."""
    return linear_section_diamond(k, n, 1)


def vanishing_part(k: int, n: int) -> HodgePolynomial:
    """Middle cohomology of the hyperplane section minus the part restricted
    from the ambient Grassmannian."""
    y = section_diamond(k, n)
    d = y.dim
    gr = grassmannian_diamond(k, n)
    coeffs = {(p, d - p): y[(p, d - p)] for p in range(d + 1)}
    if d % 2 == 0:
        coeffs[(d // 2, d // 2)] -= gr[(d // 2, d // 2)]
    return HodgePolynomial(coeffs)


def cy_type(diamond: HodgePolynomial, j: int, level: int) -> bool:
    """Is ``H^j`` of ``level``-Calabi-Yau type?

    Requires ``h^{(j+level)/2, (j-level)/2} = 1`` and zero Hodge numbers
    further out, i.e. at ``(p, j-p)`` with ``p > (j+level)/2``.
    """
    if (j + level) % 2:
        raise ValueError(f"j + level must be even, got j={j}, level={level}")
    if not 0 <= level <= j:
        raise ValueError(f"need 0 <= level <= j, got level={level}, j={j}")
    top = (j + level) // 2
    if diamond[(top, j - top)] != 1:
        return False
    return all(diamond[(p, j - p)] == 0 for p in range(top + 1, j + 1))


def cy_levels(diamond: HodgePolynomial) -> list[tuple[int, int]]:
    """All ``(j, level)`` with ``level > 0`` such that ``H^j`` has that CY level."""
    out = []
    for j in range(diamond.degree() + 1):
        for level in range(j % 2 or 2, j + 1, 2):
            if cy_type(diamond, j, level):
                out.append((j, level))
    return out


def tangent_h1(stage: int) -> int:
    """Deformation count ``h^1(T)`` along the chain ``Y = Y_0, Y_1, Y_2``.

    ``Y_0`` is a hyperplane section of ``Gr(3,10)`` with ``C(10,3) - 10^2``
    moduli; passing to ``Y_r`` (r > 0) adds the ``10 - r`` parameters of the
    ``r``-th exact sequence to the moduli of ``Y``.
    """
    if stage not in (0, 1, 2):
        raise ValueError(f"stage must be 0, 1 or 2, got {stage!r}")
    base = comb(10, 3) - 10**2
    return base if stage == 0 else base + (10 - stage)


@dataclass(frozen=True)
class HochschildCheck:
    chi: int
    hh0: int
    geometric_cy3_possible: bool


def hochschild_cy3_check() -> HochschildCheck:
    """Euler-characteristic bookkeeping for the residual category of a
    hyperplane section of ``Gr(3,11)``.

    The residual category has ``HH_0`` of dimension ``chi - 150 + 90``; a
    geometric Calabi-Yau threefold would force ``HH_0 >= 4``.
    """
    y = section_diamond(3, 11)
    chi = y.euler()
    hh0 = chi - 150 + 90
    return HochschildCheck(chi=chi, hh0=hh0, geometric_cy3_possible=hh0 >= 4)


def lefschetz_rows(diamond: HodgePolynomial) -> dict[int, list[int]]:
    """Weight rows up to the middle, non-zero entries only."""
    d = diamond.dim
    return {w: row for w, row in diamond.nontrivial_rows(d).items() if w <= d}
