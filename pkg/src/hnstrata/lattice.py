"""Quotients of the coweight lattice by Levi coroot lattices.

``QuotientLattice(rd, I_M)`` is the coweight lattice modulo the span of the
simple coroots indexed by ``I_M``.  Classes are stored canonically through a
Smith normal form: a free part (integers) and torsion residues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

from . import linalg
from .rootdata import RootDatum, coefficients
from .linalg import dot


@dataclass(frozen=True)
class QuotientLattice:
    rd: RootDatum
    subset: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "subset", self.rd.check_subset(self.subset))

    @cached_property
    def _snf(self):
        rd, k = self.rd, len(self.subset)
        n = rd.rank
        if k == 0:
            return linalg.identity(n), ()
        b = tuple(tuple(rd.simple_coroots[i][r] for i in self.subset) for r in range(n))
        u, d, _ = linalg.smith_normal_form(b)
        divisors = tuple(d[t][t] for t in range(k))
        # canonical basis for the free coordinates: functionals killing the
        # Levi coroots, in Hermite normal form
        free_rows = linalg.hermite_rows(u[k:])
        u = tuple(u[:k]) + tuple(free_rows)
        return u, divisors

    @property
    def transform(self):
        return self._snf[0]

    @cached_property
    def inverse_transform(self):
        return linalg.int_inverse(self.transform)

    @property
    def elementary_divisors(self) -> Tuple[int, ...]:
        return self._snf[1]

    @cached_property
    def torsion_positions(self) -> Tuple[int, ...]:
        return tuple(t for t, d in enumerate(self.elementary_divisors) if d > 1)

    @property
    def torsion_invariants(self) -> Tuple[int, ...]:
        return tuple(self.elementary_divisors[t] for t in self.torsion_positions)

    @property
    def free_rank(self) -> int:
        return self.rd.rank - len(self.subset)

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion_invariants:
            out *= d
        return out

    def project(self, v: Sequence[int]) -> "QuotientClass":
        if len(v) != self.rd.rank:
            raise ValueError(f"dimension mismatch: {len(v)} vs {self.rd.rank}")
        if any(Fraction(x).denominator != 1 for x in v):
            raise ValueError(f"coweight {v} is not integral")
        w = linalg.matvec(self.transform, [int(x) for x in v])
        k = len(self.subset)
        tors = tuple(int(w[t]) % self.elementary_divisors[t] for t in self.torsion_positions)
        return QuotientClass(self, tuple(int(x) for x in w[k:]), tors)

    def project_rational(self, v: Sequence) -> Tuple[Fraction, ...]:
        """Free coordinates of the image of a rational coweight (torsion dies)."""
        w = linalg.matvec(self.transform, [Fraction(x) for x in v])
        return linalg.canon_vec(w[len(self.subset):])

    def lift(self, c: "QuotientClass") -> Tuple[int, ...]:
        if c.lattice != self:
            raise ValueError("class belongs to a different quotient lattice")
        w = [0] * self.rd.rank
        for t, r in zip(self.torsion_positions, c.torsion):
            w[t] = r
        k = len(self.subset)
        for s, x in enumerate(c.free):
            w[k + s] = x
        return tuple(int(x) for x in linalg.matvec(self.inverse_transform, w))

    def lift_rational(self, free: Sequence) -> Tuple:
        """A rational coweight whose image has the given free coordinates."""
        w = [Fraction(0)] * self.rd.rank
        k = len(self.subset)
        for s, x in enumerate(free):
            w[k + s] = Fraction(x)
        return linalg.canon_vec(linalg.matvec(self.inverse_transform, w))

    def zero(self) -> "QuotientClass":
        return self.project((0,) * self.rd.rank)

    def make(self, free: Sequence[int], torsion: Sequence[int] = ()) -> "QuotientClass":
        free = tuple(int(x) for x in free)
        torsion = tuple(int(x) for x in torsion)
        if len(free) != self.free_rank or len(torsion) != len(self.torsion_invariants):
            raise ValueError(
                f"class needs {self.free_rank} free and {len(self.torsion_invariants)} torsion entries"
            )
        return QuotientClass(self, free, tuple(r % d for r, d in zip(torsion, self.torsion_invariants)))

    def generators(self):
        """Images of the standard coweight basis vectors."""
        n = self.rd.rank
        return [self.project(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]


@dataclass(frozen=True)
class QuotientClass:
    lattice: QuotientLattice = field(repr=False)
    free: Tuple[int, ...]
    torsion: Tuple[int, ...] = ()

    def _check(self, other: "QuotientClass"):
        if self.lattice != other.lattice:
            raise ValueError("classes belong to different quotient lattices")

    def __add__(self, other: "QuotientClass") -> "QuotientClass":
        self._check(other)
        return self.lattice.make(
            [a + b for a, b in zip(self.free, other.free)],
            [a + b for a, b in zip(self.torsion, other.torsion)],
        )

    def __neg__(self) -> "QuotientClass":
        return self.lattice.make([-a for a in self.free], [-a for a in self.torsion])

    def __sub__(self, other: "QuotientClass") -> "QuotientClass":
        return self + (-other)

    def lift(self) -> Tuple[int, ...]:
        return self.lattice.lift(self)

    @property
    def subset(self) -> Tuple[int, ...]:
        return self.lattice.subset

    def to_json(self) -> dict:
        return {"free": list(self.free), "torsion": list(self.torsion)}


def quotient_lattice(rd: RootDatum, subset: Iterable[int]) -> QuotientLattice:
    """Memoised per root datum; the memo lives on the (immutable) datum."""
    key = rd.check_subset(subset)
    memo = rd.__dict__.setdefault("_quotient_memo", {})
    ql = memo.get(key)
    if ql is None:
        ql = memo[key] = QuotientLattice(rd, key)
    return ql


def project(ql: QuotientLattice, v: Sequence[int]) -> QuotientClass:
    return ql.project(v)


def lift(c: QuotientClass) -> Tuple[int, ...]:
    return c.lift()


def class_from_json(rd: RootDatum, subset: Iterable[int], obj: dict) -> QuotientClass:
    ql = quotient_lattice(rd, subset)
    return ql.make(obj.get("free", ()), obj.get("torsion", ()))


def positive_witness(ql: QuotientLattice, c: QuotientClass) -> Optional[Tuple[int, ...]]:
    """A lift of ``c`` lying in the monoid spanned by all simple coroots, or
    ``None``.

    Lifts of ``c`` are ``v + sum_{i in I_M} t_i coroot_i``.  Writing ``v`` in
    the (independent) simple coroots as ``sum a_i coroot_i`` the search over
    ``t`` collapses: a lift exists iff every ``a_i`` is an integer and
    ``a_i >= 0`` off ``I_M``; the witness is ``t_i = -a_i`` on ``I_M``.
    """
    if c.lattice != ql:
        raise ValueError("class belongs to a different quotient lattice")
    v = ql.lift(c)
    a = coefficients(ql.rd, v, "coweight")
    if a is None or any(x.denominator != 1 for x in a):
        return None
    if any(a[i] < 0 for i in ql.rd.complement(ql.subset)):
        return None
    coeffs = [0 if i in ql.subset else int(a[i]) for i in ql.rd.index_set]
    return tuple(int(x) for x in linalg.lincomb(coeffs, ql.rd.simple_coroots, ql.rd.rank))


def positive_class(ql: QuotientLattice, c: QuotientClass) -> bool:
    """Membership in the image of the positive coroot monoid."""
    return positive_witness(ql, c) is not None


def in_weight_sublattice(rd: RootDatum, subset: Iterable[int], weight: Sequence) -> bool:
    """``<coroot_i, weight> = 0`` for every ``i`` in ``subset``."""
    subset = rd.check_subset(subset)
    if len(weight) != rd.rank:
        raise ValueError(f"dimension mismatch: {len(weight)} vs {rd.rank}")
    return all(dot(rd.simple_coroots[i], weight) == 0 for i in subset)


def coerce_class(rd: RootDatum, subset: Iterable[int], x) -> QuotientClass:
    """Accept a class, its JSON form, free coordinates, or an integral lift."""
    ql = quotient_lattice(rd, subset)
    if isinstance(x, QuotientClass):
        if x.lattice != ql:
            raise ValueError("degree class does not belong to this parabolic")
        return x
    if isinstance(x, dict):
        return ql.make(x.get("free", ()), x.get("torsion", ()))
    if isinstance(x, int):
        x = (x,)
    x = tuple(x)
    if len(x) == ql.free_rank and not ql.torsion_invariants:
        return ql.make(x)
    if len(x) == rd.rank:
        return ql.project(x)
    raise ValueError(
        f"expected {ql.free_rank} free coordinates or a lift of length {rd.rank}, got {len(x)} entries"
    )
