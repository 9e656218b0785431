"""Vector bundles on the projective line, as splitting types.

A bundle ``O(d_1) + ... + O(d_n)`` is its weakly decreasing degree tuple.
Everything here is exactly decidable: the canonical (Harder-Narasimhan)
reduction, specialization, Hom dimensions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .linalg import canon
from .rootdata import RootDatum, gl
from .slope import SlopeVector, fmt, phi_of_lift, slope_equal, slope_geq
from .strata import (
    Stratum,
    closure_meets_necessary,
    closure_same_parabolic_contains,
    comparison_geq,
    make_stratum,
)


@dataclass(frozen=True)
class SplittingType:
    degrees: Tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.degrees)
        if not d:
            raise ValueError("rank must be at least 1")
        object.__setattr__(self, "degrees", tuple(sorted(d, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __str__(self):
        return "(" + ",".join(map(str, self.degrees)) + ")"


def splitting_type(d) -> SplittingType:
    return d if isinstance(d, SplittingType) else SplittingType(tuple(d))


@dataclass(frozen=True)
class HNData:
    block_ranks: Tuple[int, ...]
    block_degrees: Tuple[int, ...]

    @property
    def block_slopes(self) -> Tuple:
        return tuple(canon(Fraction(d, r)) for d, r in zip(self.block_degrees, self.block_ranks))

    def to_json(self) -> dict:
        return {
            "ranks": list(self.block_ranks),
            "degrees": list(self.block_degrees),
            "slopes": [fmt(x) for x in self.block_slopes],
        }


@lru_cache(maxsize=None)
def _gl(n: int) -> RootDatum:
    return gl(n)


def hn_blocks(st) -> List[Tuple[int, ...]]:
    st = splitting_type(st)
    return [tuple(g) for _, g in itertools.groupby(st.degrees)]


def canonical_reduction(st) -> Tuple[HNData, Stratum]:
    """Group equal degrees; the flag of partial sums is the HN filtration."""
    st = splitting_type(st)
    blocks = hn_blocks(st)
    hn = HNData(tuple(len(b) for b in blocks), tuple(sum(b) for b in blocks))
    I_M = []
    pos = 0
    for b in blocks:
        I_M.extend(range(pos, pos + len(b) - 1))
        pos += len(b)
    stratum = make_stratum(_gl(st.rank), I_M, st.degrees)
    slopes = hn.block_slopes
    assert all(a > b for a, b in zip(slopes, slopes[1:]))
    return hn, stratum


def specializes_to(d, d2) -> bool:
    """Equal total degree and partial sums of ``d2`` dominate those of ``d``
    (both sorted in decreasing order)."""
    a, b = splitting_type(d), splitting_type(d2)
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    if a.degree != b.degree:
        return False
    return all(x >= y for x, y in zip(itertools.accumulate(b.degrees), itertools.accumulate(a.degrees)))


def specializes_to_bruteforce(d, d2) -> bool:
    """Some permutation of ``d2`` lies in ``d + sum Z>=0 (e_i - e_{i+1})``."""
    a, b = splitting_type(d), splitting_type(d2)
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    for perm in set(itertools.permutations(b.degrees)):
        diff = [x - y for x, y in zip(perm, a.degrees)]
        # coefficient of e_i - e_{i+1} is the i-th partial sum
        partial = list(itertools.accumulate(diff))
        if partial[-1] == 0 and all(p >= 0 for p in partial[:-1]):
            return True
    return False


def splitting_types(n: int, total: int, box: int) -> List[SplittingType]:
    """Weakly decreasing tuples of length ``n``, sum ``total``, entries in ``[-box, box]``."""
    out = []

    def rec(prefix, left, hi):
        k = n - len(prefix)
        if k == 0:
            if left == 0:
                out.append(SplittingType(tuple(prefix)))
            return
        for x in range(min(hi, box), -box - 1, -1):
            rest = left - x
            if rest > (k - 1) * x or rest < -(k - 1) * box:
                continue
            rec(prefix + [x], rest, x)

    rec([], total, box)
    return sorted(out, key=lambda s: s.degrees)


def covering_edges(types: Sequence[SplittingType]) -> List[Tuple[SplittingType, SplittingType]]:
    """Covers of the specialization order, from single unit transfers."""
    present = set(types)
    edges = []
    for t in types:
        d = t.degrees
        cands = set()
        for i, j in itertools.combinations(range(len(d)), 2):
            e = list(d)
            e[i] += 1
            e[j] -= 1
            s = SplittingType(tuple(e))
            if s != t and s in present:
                cands.add(s)
        for s in cands:
            between = any(
                u not in (t, s) and specializes_to(t, u) and specializes_to(u, s) for u in cands
            )
            if not between:
                edges.append((t, s))
    return sorted(edges, key=lambda e: (e[0].degrees, e[1].degrees))


def transitive_reduction_edges(types: Sequence[SplittingType]) -> List[Tuple[SplittingType, SplittingType]]:
    """Oracle: covers straight from the definition."""
    out = []
    for a in types:
        for b in types:
            if a == b or not specializes_to_bruteforce(a, b):
                continue
            if any(
                c not in (a, b) and specializes_to_bruteforce(a, c) and specializes_to_bruteforce(c, b)
                for c in types
            ):
                continue
            out.append((a, b))
    return sorted(out, key=lambda e: (e[0].degrees, e[1].degrees))


@dataclass(frozen=True)
class PosetReport:
    n: int
    total: int
    box: int
    nodes: Tuple[SplittingType, ...]
    edges: Tuple[Tuple[SplittingType, SplittingType], ...]
    monotone: bool
    gl2_closure: bool  # vacuous for n != 2

    @property
    def ok(self) -> bool:
        return self.monotone and self.gl2_closure

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.total,
            "box": self.box,
            "nodes": [list(t.degrees) for t in self.nodes],
            "edges": [[list(a.degrees), list(b.degrees)] for a, b in self.edges],
            "checks": {"slope_monotone": self.monotone, "gl2_closure": self.gl2_closure},
        }

    def to_dot(self) -> str:
        lines = ["digraph specialization {"]
        for t in self.nodes:
            lines.append(f'  "{t}";')
        for a, b in self.edges:
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def strata_poset(n: int, total: int, box: int) -> PosetReport:
    if box < 0:
        raise ValueError("box bound must be nonnegative")
    if n < 1:
        raise ValueError("rank must be at least 1")
    nodes = splitting_types(n, total, box)
    edges = covering_edges(nodes)
    slopes = {t: canonical_reduction(t)[1].slope for t in nodes}
    monotone = all(slope_geq(slopes[b], slopes[a]) for a, b in edges)
    closure_ok = True
    if n == 2:
        for t in nodes:
            closure = {u for u in nodes if specializes_to(t, u)}
            expected = {u for u in nodes if u.degrees[0] >= t.degrees[0]}
            closure_ok = closure_ok and closure == expected
    return PosetReport(n, total, box, tuple(nodes), tuple(edges), monotone, closure_ok)


def hom_dim(a, b) -> int:
    """``dim Hom(E_a, E_b)`` for split bundles: ``h^0(O(b_j - a_i))`` summed."""
    a = a.degrees if isinstance(a, SplittingType) else tuple(a)
    b = b.degrees if isinstance(b, SplittingType) else tuple(b)
    return sum(max(0, y - x + 1) for x in a for y in b)


def mds_hom_vanishing(st) -> bool:
    """No maps from the maximal destabilizing subbundle to the quotient."""
    blocks = hn_blocks(st)
    top = blocks[0]
    rest = tuple(x for b in blocks[1:] for x in b)
    value = hom_dim(top, rest)
    assert value == 0, f"Hom(D, F/D) = {value} for {splitting_type(st)}"
    return value == 0


@dataclass(frozen=True)
class FlagCheck:
    degrees: Tuple[int, ...]
    slope: Tuple
    dominated: bool
    equal: bool


def flag_strata_of_permutations(st) -> List[FlagCheck]:
    """Each ordering of the summands gives a full flag; its B-slope is the
    ordering itself.  Compared against the canonical slope."""
    st = splitting_type(st)
    _, can = canonical_reduction(st)
    rd = can.rd
    out = []
    for perm in sorted(set(itertools.permutations(st.degrees)), reverse=True):
        s = phi_of_lift(rd, (), perm)
        out.append(FlagCheck(perm, s.coords, slope_geq(can.slope, s), slope_equal(can.slope, s)))
    return out


def comparison_holds(st) -> bool:
    """Canonical slope dominates every permutation flag; equality only for
    the decreasing ordering."""
    st = splitting_type(st)
    for f in flag_strata_of_permutations(st):
        if not f.dominated:
            return False
        if f.equal != (f.degrees == st.degrees):
            return False
    return True


def filtration_matches_hn(st) -> bool:
    """Slope filtration of the standard representation reproduces the HN blocks."""
    from .reps import filtration_levels, weyl_weights

    st = splitting_type(st)
    hn, can = canonical_reduction(st)
    rd = can.rd
    V = weyl_weights(rd, (1,) + (0,) * (st.rank - 1))
    levels = filtration_levels(V, can.slope)
    ranks = tuple(l.dim for l in levels)
    degrees = tuple(l.q * l.dim for l in levels)
    return ranks == hn.block_ranks and degrees == hn.block_degrees


NON_CONTAINMENT = "refuted in the literature (needs a stable rank-2 bundle of degree 0 in genus >= 2); not decidable here"


def gl3_report() -> Dict:
    """The GL(3) pair of strata: the complete flag (2,1,0) and the
    two-step flag with graded degrees (3,0)."""
    rd = _gl(3)
    a = make_stratum(rd, (), (2, 1, 0))
    b = make_stratum(rd, (1,), (3, 0))
    try:
        closure_same_parabolic_contains(a, b)
        same = "decided"
    except ValueError as e:
        same = f"precondition fails: {e}"
    cmp = comparison_geq(a, b.I_M, b.degree)
    return {
        "a": a.to_json(),
        "b": b.to_json(),
        "b_more_unstable": slope_geq(b.slope, a.slope) and not slope_equal(a.slope, b.slope),
        "a_geq_b": cmp.geq,
        "closure_meets": {"value": closure_meets_necessary(a, b), "kind": "necessary-only"},
        "closure_same_parabolic": same,
        "containment": NON_CONTAINMENT,
    }
