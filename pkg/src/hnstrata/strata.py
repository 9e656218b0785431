"""Strata indices (parabolic, degree), destabilisation, comparison and closure
predicates, and enumeration under a cap on the slope coefficients."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from . import linalg
from .lattice import QuotientClass, coerce_class, positive_class, quotient_lattice
from .linalg import dot
from .rootdata import RootDatum
from .slope import SlopeVector, fmt, phi, phi_G, phi_of_lift, proj_P, regularity_failures, slope_equal, slope_geq


@dataclass(frozen=True)
class Stratum:
    I_M: Tuple[int, ...]
    degree: QuotientClass
    slope: SlopeVector
    lambda_G: QuotientClass

    @property
    def rd(self) -> RootDatum:
        return self.slope.rd

    @property
    def codim_rank(self) -> int:
        """``|I - I_M|``."""
        return self.rd.semisimple_rank - len(self.I_M)

    def key(self):
        return (self.I_M, self.degree.free, self.degree.torsion)

    def to_json(self) -> dict:
        return {
            "I_M": list(self.I_M),
            "degree": self.degree.to_json(),
            "slope": [fmt(x) for x in self.slope.coords],
            "lambda_G": self.lambda_G.to_json(),
        }


def induced_class(rd: RootDatum, c: QuotientClass) -> QuotientClass:
    return quotient_lattice(rd, rd.index_set).project(c.lift())


def make_stratum(rd: RootDatum, I_M: Iterable[int], degree) -> Stratum:
    I_M = rd.check_subset(I_M)
    c = coerce_class(rd, I_M, degree)
    s = phi(rd, I_M, c)
    bad = regularity_failures(s)
    if bad:
        detail = ", ".join(f"<phi, alpha_{j}> = {fmt(dot(s.coords, rd.simple_roots[j]))}" for j in bad)
        raise ValueError(f"degree is not dominant regular for I_M={list(I_M)}: {detail}")
    return Stratum(I_M, c, s, induced_class(rd, c))


def is_destabilizing(rd: RootDatum, I_M: Iterable[int], degree, lambda_G) -> bool:
    """Whether a reduction of the given degree destabilises.

    Decided twice: by the slope inequality and by the sign of the projection
    onto the coroots off the Levi.  The two answers are required to agree.
    """
    I_M = rd.check_subset(I_M)
    c = coerce_class(rd, I_M, degree)
    lg = coerce_class(rd, rd.index_set, lambda_G)
    if induced_class(rd, c) != lg:
        raise ValueError("degree does not induce the given G-degree")
    by_slope = not slope_geq(phi_G(rd, lg), phi(rd, I_M, c))
    by_projection = not proj_P(rd, I_M, c).is_nonpositive()
    assert by_slope == by_projection, "slope and projection criteria disagree"
    return by_slope


@dataclass(frozen=True)
class Comparison:
    geq: bool
    equal: bool
    nested: Optional[bool]  # I_M' <= I_M, reported when the slopes agree

    def __bool__(self):
        return self.geq

    def to_json(self) -> dict:
        return {"geq": self.geq, "equal": self.equal, "nested": self.nested}


def comparison_geq(canonical: Stratum, other_I_M: Iterable[int], other_degree) -> Comparison:
    rd = canonical.rd
    other_I_M = rd.check_subset(other_I_M)
    c = coerce_class(rd, other_I_M, other_degree)
    if induced_class(rd, c) != canonical.lambda_G:
        raise ValueError("the two reductions have different G-degrees")
    s = phi(rd, other_I_M, c)
    geq = slope_geq(canonical.slope, s)
    equal = slope_equal(canonical.slope, s)
    nested = None
    if equal:
        # the other slope is orthogonal to its Levi roots, the canonical one
        # strictly positive off I_M, so I_M' must sit inside I_M
        nested = set(other_I_M) <= set(canonical.I_M)
        assert nested, "equal slopes with non-nested Levis"
    return Comparison(geq, equal, nested)


def _strata_for_subset(rd: RootDatum, I_M: Tuple[int, ...], lg: QuotientClass, bound: Fraction) -> List[Stratum]:
    off = rd.complement(I_M)
    base = lg.lift()
    if not off:
        return [make_stratum(rd, I_M, base)]
    s0 = phi_of_lift(rd, I_M, base).coords
    c0 = [dot(s0, rd.simple_roots[j]) for j in off]
    cols = [phi_of_lift(rd, I_M, rd.simple_coroots[i]).coords for i in off]
    # c = c0 + K n with K[j][i] = <phi(coroot_i), alpha_j>, a Schur complement
    # of the Cartan matrix, hence invertible
    K = [[dot(col, rd.simple_roots[j]) for col in cols] for j in off]
    Kinv = linalg.inverse(K)
    ranges = []
    for row in Kinv:
        lo = hi = Fraction(0)
        for kij, c0j in zip(row, c0):
            ends = (kij * (0 - c0j), kij * (bound - c0j))
            lo += min(ends)
            hi += max(ends)
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    out = []
    seen = set()
    for n in itertools.product(*ranges):
        c = [c0j + dot(Krow, n) for c0j, Krow in zip(c0, K)]
        if not all(0 < x <= bound for x in c):
            continue
        v = linalg.add(base, linalg.lincomb(n, [rd.simple_coroots[i] for i in off], rd.rank))
        st = make_stratum(rd, I_M, v)
        if st.key() not in seen:
            seen.add(st.key())
            out.append(st)
    return out


def enumerate_strata(rd: RootDatum, lambda_G, bound) -> List[Stratum]:
    """All strata over ``lambda_G`` whose slope is ``phi_G + sum c_i omega_i``
    with every ``c_i <= bound``.

    Ordered by ``|I - I_M|`` (largest first), then by slope.
    """
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    lg = coerce_class(rd, rd.index_set, lambda_G)
    out = []
    for k in range(rd.semisimple_rank + 1):
        for I_M in itertools.combinations(rd.index_set, k):
            out.extend(_strata_for_subset(rd, I_M, lg, bound))
    out.sort(key=lambda s: (-s.codim_rank, s.slope.coords, s.I_M))
    return out


def closure_same_parabolic_contains(a: Stratum, b: Stratum) -> bool:
    """Same parabolic: ``b`` lies in the closure of ``a`` iff ``b - a`` is a
    positive class."""
    if a.I_M != b.I_M:
        raise ValueError(f"parabolics differ: {list(a.I_M)} vs {list(b.I_M)}")
    return positive_class(a.degree.lattice, b.degree - a.degree)


def closure_meets_necessary(a: Stratum, b: Stratum) -> bool:
    """Necessary condition for the closure of ``a`` to meet ``b``; not
    sufficient in general."""
    return a.lambda_G == b.lambda_G and slope_geq(b.slope, a.slope)


def stratum_from_json(rd: RootDatum, obj: Dict) -> Stratum:
    return make_stratum(rd, obj["I_M"], obj["degree"])
