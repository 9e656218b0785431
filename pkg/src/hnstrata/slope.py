"""The slope map and the comparisons built on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .lattice import QuotientClass, quotient_lattice
from .linalg import canon_vec, dot
from .rootdata import RootDatum, coefficients


@dataclass(frozen=True)
class SlopeVector:
    """A rational coweight together with the parabolic it came from."""

    coords: Tuple
    subset: Tuple[int, ...]
    rd: RootDatum = field(compare=False, repr=False)
    source: Optional[QuotientClass] = field(default=None, compare=False, repr=False)

    def pairing(self, weight: Sequence):
        return dot(self.coords, weight)

    def to_json(self) -> dict:
        return {"coords": [fmt(x) for x in self.coords], "I_M": list(self.subset)}


def fmt(x) -> str:
    """Rationals serialise as ``"p/q"`` strings (integers as ``"p"``)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    return Fraction(str(s))


def correct_into_center(rd: RootDatum, subset: Sequence[int], v: Sequence) -> Tuple:
    """Subtract the unique combination of Levi coroots making ``v`` orthogonal
    to the Levi roots.  This is the slope map on a (rational) lift ``v``."""
    subset = tuple(subset)
    if not subset:
        return canon_vec(v)
    a = rd.cartan
    sub = [[a[i][j] for i in subset] for j in subset]  # rows j, cols i
    rhs = [dot(v, rd.simple_roots[j]) for j in subset]
    x = linalg.solve(sub, rhs)
    return canon_vec(linalg.sub(v, linalg.lincomb(x, [rd.simple_coroots[i] for i in subset], rd.rank)))


def phi(rd: RootDatum, subset: Iterable[int], c: QuotientClass) -> SlopeVector:
    subset = rd.check_subset(subset)
    if c.lattice != quotient_lattice(rd, subset):
        raise ValueError("degree class does not belong to this parabolic")
    return SlopeVector(correct_into_center(rd, subset, c.lift()), subset, rd, c)


def phi_of_lift(rd: RootDatum, subset: Iterable[int], v: Sequence[int]) -> SlopeVector:
    subset = rd.check_subset(subset)
    return phi(rd, subset, quotient_lattice(rd, subset).project(v))


def phi_G(rd: RootDatum, lambda_G: QuotientClass) -> SlopeVector:
    return phi(rd, rd.index_set, lambda_G)


def regularity_failures(s: SlopeVector) -> List[int]:
    """Simple roots off the Levi pairing non-positively with ``s``."""
    return [j for j in s.rd.complement(s.subset) if dot(s.coords, s.rd.simple_roots[j]) <= 0]


def is_dominant_P_regular(s: SlopeVector) -> bool:
    return not regularity_failures(s)


def phi_of_simple_coroot(rd: RootDatum, subset: Iterable[int], j: int) -> SlopeVector:
    """Slope of the class of the ``j``-th simple coroot, ``j`` off the Levi.

    The result always lies in the nonnegative coroot cone and pairs strictly
    positively with the ``j``-th simple root; both facts are asserted.
    """
    subset = rd.check_subset(subset)
    if j in subset or not 0 <= j < rd.semisimple_rank:
        raise ValueError(f"index {j} must lie outside {list(subset)}")
    s = phi_of_lift(rd, subset, rd.simple_coroots[j])
    c = coefficients(rd, s.coords, "coweight")
    assert c is not None and all(x >= 0 for x in c), f"phi(coroot_{j}) = {s.coords} not positive"
    assert dot(s.coords, rd.simple_roots[j]) > 0, f"<phi(coroot_{j}), root_{j}> <= 0"
    return s


@dataclass(frozen=True)
class ProjectedClass:
    """A rational class in the quotient, written as ``sum x_i [coroot_i]``
    over the simple roots off the Levi."""

    subset: Tuple[int, ...]
    coefficients: Tuple[Tuple[int, Fraction], ...]
    free: Tuple

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coefficients)

    def is_nonpositive(self) -> bool:
        return all(x <= 0 for _, x in self.coefficients)

    def is_zero(self) -> bool:
        return all(x == 0 for _, x in self.coefficients)


def proj_P(rd: RootDatum, subset: Iterable[int], c: QuotientClass) -> ProjectedClass:
    """Component of the rationalised class along the simple coroots off the
    Levi, in the splitting (center of G) + (those coroots).

    Computed straight from a lift: the lift minus its central part is a
    combination of all simple coroots, and the Levi ones die in the quotient.
    """
    subset = rd.check_subset(subset)
    ql = quotient_lattice(rd, subset)
    if c.lattice != ql:
        raise ValueError("degree class does not belong to this parabolic")
    v = c.lift()
    central = correct_into_center(rd, rd.index_set, v)
    u = coefficients(rd, linalg.sub(v, central), "coweight")
    off = rd.complement(subset)
    coeffs = tuple((i, linalg.canon(u[i])) for i in off)
    rep = linalg.lincomb([u[i] for i in off], [rd.simple_coroots[i] for i in off], rd.rank)
    out = ProjectedClass(subset, coeffs, ql.project_rational(rep))

    # phi_P(proj_P(c)) = phi_P(c) - phi_G(c)
    lhs = correct_into_center(rd, subset, rep)
    rhs = linalg.sub(correct_into_center(rd, subset, v), central)
    assert canon_vec(lhs) == canon_vec(rhs), "projection identity failed"
    return out


def slope_geq(a: SlopeVector, b: SlopeVector) -> bool:
    """``a >= b`` in the dominance order on rational coweights."""
    if a.rd != b.rd:
        raise ValueError("slopes come from different root data")
    diff = linalg.sub(a.coords, b.coords)
    c = coefficients(a.rd, diff, "coweight")
    if c is None and a.source is not None and b.source is not None:
        rd = a.rd
        full = quotient_lattice(rd, rd.index_set)
        same_g = full.project(a.source.lift()) == full.project(b.source.lift())
        assert not same_g, "slopes over the same G-degree differ outside the coroot span"
    return c is not None and all(x >= 0 for x in c)


def slope_equal(a: SlopeVector, b: SlopeVector) -> bool:
    return canon_vec(a.coords) == canon_vec(b.coords)


def decompose_dominant(rd: RootDatum, subset: Iterable[int], weight: Sequence) -> Tuple[Tuple, Tuple]:
    """Split a dominant rational weight as ``mu + tau``: ``mu`` dominant and
    orthogonal to the Levi coroots, ``tau`` a nonnegative combination of the
    Levi simple roots."""
    subset = rd.check_subset(subset)
    if len(weight) != rd.rank:
        raise ValueError(f"dimension mismatch: {len(weight)} vs {rd.rank}")
    if not rd.is_dominant_weight(weight):
        raise ValueError(f"weight {tuple(weight)} is not dominant")
    if not subset:
        return canon_vec(weight), (0,) * rd.rank
    a = rd.cartan
    sub = [[a[j][i] for i in subset] for j in subset]
    rhs = [dot(rd.simple_coroots[j], weight) for j in subset]
    c = linalg.solve(sub, rhs)
    tau = linalg.lincomb(c, [rd.simple_roots[i] for i in subset], rd.rank)
    mu = linalg.sub(weight, tau)
    assert all(x >= 0 for x in c), "Levi part has a negative coefficient"
    assert rd.is_dominant_weight(mu), "central part is not dominant"
    return canon_vec(mu), canon_vec(tau)


def omega_coefficients(s: SlopeVector) -> Tuple:
    """``c_i = <s, alpha_i>``: the coordinates of ``s - phi_G`` in the
    fundamental coweights."""
    return canon_vec(dot(s.coords, r) for r in s.rd.simple_roots)
