"""Integer arithmetic progressions of three squares (congrua), their
reduction mod p into unit triples, and the modular coverage report.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import (
    BadParameters,
    BadPrimeForm,
    DividesTerm,
    FiveExcluded,
    NonResidueDifference,
    NotCovered,
    ResiduumError,
)
from .fp import FieldElement, PrimeContext, inv, legendre, make_context, sqrt_mod
from .residue import UnitTriple, consecutive_triples, triple_from_member

# Explicit consecutive-run tables for the three small primes the generic
# routes miss: 29 and 41 collide with terms of the (5,4) progression, and 37
# falls outside both residue criteria.
SMALL_CASE_TABLES = {
    29: (4, 5, 22, 23),
    37: (9, 10, 25, 26),
    41: (8, 31),
}


@dataclass(frozen=True)
class SquareProgression:
    """x^2, y^2, z^2 in arithmetic progression with common difference d."""

    x: int
    y: int
    z: int
    d: int
    primitive: bool = True

    def __post_init__(self):
        if not (self.x > self.y > self.z >= 1):
            raise BadParameters(f"need x > y > z >= 1, got ({self.x}, {self.y}, {self.z})")
        if self.x ** 2 - self.y ** 2 != self.d or self.y ** 2 - self.z ** 2 != self.d:
            raise BadParameters("squares are not in arithmetic progression")


def congruum_triple(m: int, n: int) -> SquareProgression:
    """Parametric progression with difference 4mn(m^2 - n^2).

    Coprime m > n of opposite parity give a primitive progression; other
    inputs are accepted but flagged primitive=False.
    """
    if n < 1 or m <= n:
        raise BadParameters(f"need m > n >= 1, got m={m}, n={n}")
    primitive = gcd(m, n) == 1 and (m - n) % 2 == 1
    return SquareProgression(
        x=m * m - n * n + 2 * m * n,
        y=m * m + n * n,
        z=abs(m * m - n * n - 2 * m * n),
        d=4 * m * n * (m * m - n * n),
        primitive=primitive,
    )


def ap_to_unit_triple(prog: SquareProgression, ctx: PrimeContext) -> UnitTriple:
    """Scale an integer progression by the inverse root of its difference and
    reduce mod p, yielding a unit triple (so gamma^2 starts a consecutive
    residue run)."""
    p = ctx.p
    if p % 4 != 1:
        raise BadPrimeForm(f"unit triples need p = 1 (mod 4), got {p}")
    if (prog.x * prog.y * prog.z) % p == 0:
        raise DividesTerm(f"{p} divides a term of ({prog.x}, {prog.y}, {prog.z})")
    d = FieldElement(prog.d, ctx)
    if legendre(d) != 1:
        raise NonResidueDifference(f"{prog.d} is not a nonzero square mod {p}")
    r_inv = inv(sqrt_mod(d))
    return UnitTriple(alpha=prog.x * r_inv, beta=prog.y * r_inv, gamma=prog.z * r_inv)


def construct_mod20(ctx: PrimeContext) -> UnitTriple:
    """Unit triple for p = 1 or 9 (mod 20), via the (5,4) progression
    (49, 41, 31; difference 720).

    29 and 41 satisfy the residue condition but collide with the progression
    terms, so they are served from the stored run tables.
    """
    p = ctx.p
    if p % 20 not in (1, 9):
        raise NotCovered(f"{p} is not 1 or 9 (mod 20)")
    if p in SMALL_CASE_TABLES:
        return triple_from_member(ctx, SMALL_CASE_TABLES[p][0])
    return ap_to_unit_triple(congruum_triple(5, 4), ctx)


def construct_mod24(ctx: PrimeContext) -> UnitTriple:
    """Unit triple for p = 1 or 5 (mod 24), p != 5, via the (2,1) progression
    (7, 5, 1; difference 24). The triple constructor asserts the unit
    relations, so a successful return is itself the verification."""
    p = ctx.p
    if p == 5:
        raise FiveExcluded("5 divides a term of (7, 5, 1); no construction exists")
    if p % 24 not in (1, 5):
        raise NotCovered(f"{p} is not 1 or 5 (mod 24)")
    # p | 7*5*1 is impossible here: 7 = 3 (mod 4) and 5 was excluded above
    return ap_to_unit_triple(congruum_triple(2, 1), ctx)


class Coverage(Enum):
    EXCLUDED_5_13_17 = "excluded_5_13_17"
    COVERED_MOD20 = "covered_mod20"
    COVERED_MOD24 = "covered_mod24"
    COVERED_BOTH = "covered_both"
    SMALL_CASE_TABLE = "small_case_table"
    UNCOVERED_BUT_NONEMPTY = "uncovered_but_nonempty"

CONSTRUCTIBLE = (
    Coverage.COVERED_MOD20,
    Coverage.COVERED_MOD24,
    Coverage.COVERED_BOTH,
    Coverage.SMALL_CASE_TABLE,
)


@dataclass(frozen=True)
class CoverageStatus:
    p: int
    status: Coverage


def coverage_status(p: int) -> CoverageStatus:
    """Which construction (if any) reaches p.

    Precedence: the empty-run exclusions, then the residue criteria (both
    before either alone), then the stored small-case tables, and finally a
    direct numerical check that the run set is nonempty.
    """
    ctx = make_context(p)
    if ctx.p % 4 != 1:
        raise BadPrimeForm(f"coverage is defined for p = 1 (mod 4), got {p}")
    if p in (5, 13, 17):
        return CoverageStatus(p, Coverage.EXCLUDED_5_13_17)
    m20 = p % 20 in (1, 9)
    m24 = p % 24 in (1, 5)
    if m20 and m24:
        return CoverageStatus(p, Coverage.COVERED_BOTH)
    if m20:
        return CoverageStatus(p, Coverage.COVERED_MOD20)
    if m24:
        return CoverageStatus(p, Coverage.COVERED_MOD24)
    if p in SMALL_CASE_TABLES:
        return CoverageStatus(p, Coverage.SMALL_CASE_TABLE)
    if consecutive_triples(ctx):
        return CoverageStatus(p, Coverage.UNCOVERED_BUT_NONEMPTY)
    raise ResiduumError(
        f"no consecutive residue run mod {p}; impossible for p = 1 (mod 4), p > 17"
    )


def eligible_params(m_max: int = 10) -> list[tuple[int, int]]:
    """Coprime opposite-parity (m, n) pairs with n < m <= m_max."""
    return [
        (m, n)
        for m in range(2, m_max + 1)
        for n in range(1, m)
        if gcd(m, n) == 1 and (m - n) % 2 == 1
    ]


def sweep_congrua(ctx: PrimeContext, m_max: int = 10) -> list[tuple[int, int, UnitTriple]]:
    """Try every small primitive progression against F_p and return the
    (m, n, triple) combinations that map in. Purely exploratory: success
    here proves nothing beyond the individual prime."""
    out = []
    for m, n in eligible_params(m_max):
        try:
            t = ap_to_unit_triple(congruum_triple(m, n), ctx)
        except (DividesTerm, NonResidueDifference):
            continue
        out.append((m, n, t))
    return out
