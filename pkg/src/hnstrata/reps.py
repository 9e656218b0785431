"""Weight multisets of Weyl modules and the subspaces cut out of them.

Representations are modelled by their characters: a map from weights to
multiplicities.  Weyl modules come from Freudenthal's recursion, checked
against the Weyl dimension formula.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .bruhat import LeviPair
from .linalg import canon, dot
from .rootdata import RootDatum, fundamental_coweights

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class WeightMultiset:
    rd: RootDatum = field(repr=False)
    highest: Weight
    entries: Tuple[Tuple[Weight, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "highest", tuple(self.highest))
        merged: Dict[Weight, int] = defaultdict(int)
        for w, m in self.entries:
            merged[tuple(w)] += int(m)
        if any(m < 0 for m in merged.values()):
            raise ValueError("multiplicities must be positive")
        ordered = tuple(sorted(((w, m) for w, m in merged.items() if m), reverse=True))
        object.__setattr__(self, "entries", ordered)

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.entries)

    def mult(self, w: Sequence) -> int:
        return self.as_dict().get(tuple(w), 0)

    @property
    def weights(self) -> Tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.entries)

    def restrict(self, keep) -> "WeightMultiset":
        out = WeightMultiset(self.rd, self.highest, tuple((w, m) for w, m in self.entries if keep(w)))
        if "depths" in self.__dict__:
            out.__dict__["depths"] = {w: self.depths[w] for w, _ in out.entries}
        return out

    @cached_property
    def depths(self) -> Dict[Weight, Optional[Tuple]]:
        """Root coordinates of ``highest - nu`` for every weight ``nu``."""
        return {w: _root_coords(self.rd, linalg.sub(self.highest, w)) for w, _ in self.entries}

    def weight_sum(self) -> Tuple:
        return linalg.lincomb([m for _, m in self.entries], [w for w, _ in self.entries], self.rd.rank)

    def to_json(self) -> dict:
        return {
            "highest": list(self.highest),
            "weights": [{"w": list(w), "m": m} for w, m in self.entries],
        }


def multiset_from_json(rd: RootDatum, obj: dict) -> WeightMultiset:
    """User-supplied character; every weight must lie below the highest one."""
    hi = tuple(int(x) for x in obj["highest"])
    if len(hi) != rd.rank:
        raise ValueError(f"dimension mismatch: {len(hi)} vs {rd.rank}")
    if not rd.is_dominant_weight(hi):
        raise ValueError(f"highest weight {hi} is not dominant")
    entries = []
    for e in obj.get("weights", ()):
        w = tuple(int(x) for x in e["w"])
        m = int(e.get("m", 1))
        if m <= 0:
            raise ValueError(f"multiplicity of {w} must be positive")
        c = _root_coords(rd, linalg.sub(hi, w))
        if c is None or any(Fraction(x).denominator != 1 or x < 0 for x in c):
            raise ValueError(f"weight {w} is not below the highest weight {hi}")
        entries.append((w, m))
    return WeightMultiset(rd, hi, tuple(entries))


@lru_cache(maxsize=64)
def _coweight_duals(rd: RootDatum) -> Tuple[Tuple, ...]:
    return fundamental_coweights(rd) if rd.semisimple_rank else ()


def _root_coords(rd: RootDatum, v: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """Coordinates in the simple roots (``None`` off their span).  Pairing
    with the fundamental coweights recovers them; the recombination check
    catches vectors outside the span."""
    c = tuple(dot(f, v) for f in _coweight_duals(rd))
    back = linalg.lincomb(c, rd.simple_roots, rd.rank)
    if any(x != y for x, y in zip(back, v)):
        return None
    return c


# -- Freudenthal --------------------------------------------------------------


def _dominant_conjugate(a, p: Sequence[int], c: Tuple[int, ...]) -> Tuple[int, ...]:
    """Root coordinates (relative to lambda) of the dominant conjugate of
    ``nu = lambda - sum c_i alpha_i``; ``p_i = <coroot_i, lambda>``."""
    c = list(c)
    m = len(c)
    while True:
        for i in range(m):
            pair = p[i] - sum(c[j] * a[i][j] for j in range(m))
            if pair < 0:
                c[i] += pair
                break
        else:
            return tuple(c)


@lru_cache(maxsize=256)
def _freudenthal(a: Tuple[Tuple[int, ...], ...], eps: Tuple[Fraction, ...], pos: Tuple[Tuple[int, ...], ...], p: Tuple[int, ...]):
    """Multiplicities keyed by root coordinates ``c`` with ``nu = lambda - sum c_i alpha_i``.

    Depends only on Cartan data and ``p``, so it is cached on those.
    """
    m = len(p)
    zero = (0,) * m

    def in_support(c):
        d = _dominant_conjugate(a, p, c)
        return all(x >= 0 for x in d), d

    conj = {zero: zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(m):
                c2 = c[:i] + (c[i] + 1,) + c[i + 1:]
                if c2 in conj:
                    continue
                ok, d = in_support(c2)
                if ok:
                    conj[c2] = d
                    nxt.append(c2)
        frontier = nxt

    bmat = [[eps[i] * a[i][j] for j in range(m)] for i in range(m)]
    lam_dot = [eps[j] * p[j] for j in range(m)]  # (lambda, alpha_j)
    lr_dot = [eps[j] * (p[j] + 1) for j in range(m)]  # (lambda + rho, alpha_j)

    def pair_root(c, b):  # (lambda - sum c alpha, sum b alpha)
        return sum(b[j] * (lam_dot[j] - sum(c[i] * bmat[i][j] for i in range(m))) for j in range(m))

    mult = {zero: 1}
    dominant = sorted((c for c, d in conj.items() if c == d and c != zero), key=lambda c: (sum(c), c))
    for c in dominant:
        total = Fraction(0)
        for b in pos:
            k = 1
            while True:
                ck = tuple(x - k * y for x, y in zip(c, b))
                if ck not in conj:
                    break
                total += mult[conj[ck]] * pair_root(ck, b)
                k += 1
        denom = 2 * sum(c[i] * lr_dot[i] for i in range(m)) - sum(
            c[i] * bmat[i][j] * c[j] for i in range(m) for j in range(m)
        )
        value = 2 * total / denom
        assert value.denominator == 1 and value >= 0, "Freudenthal produced a non-integer multiplicity"
        mult[c] = int(value)
    return tuple(sorted((c, mult[d]) for c, d in conj.items() if mult[d] > 0))


def weyl_dimension(rd: RootDatum, lam: Sequence[int]) -> int:
    """Weyl dimension formula, one factor per positive coroot."""
    p = [dot(c, lam) for c in rd.simple_coroots]
    out = Fraction(1)
    for b in rd.positive_coroot_coords:
        out *= Fraction(sum(bi * (pi + 1) for bi, pi in zip(b, p)), sum(b))
    assert out.denominator == 1
    return int(out)


def weyl_weights(rd: RootDatum, lam: Sequence[int]) -> WeightMultiset:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rd.rank:
        raise ValueError(f"dimension mismatch: {len(lam)} vs {rd.rank}")
    if not rd.is_dominant_weight(lam):
        bad = [i for i, c in enumerate(rd.simple_coroots) if dot(c, lam) < 0]
        raise ValueError(f"weight {lam} is not dominant (negative on coroots {bad})")
    p = tuple(dot(c, lam) for c in rd.simple_coroots)
    table = _freudenthal(rd.cartan, rd.symmetrizer, rd.positive_root_coords, p)
    entries = []
    depths = {}
    for c, m in table:
        nu = tuple(int(x) for x in linalg.sub(lam, linalg.lincomb(c, rd.simple_roots, rd.rank)))
        entries.append((nu, m))
        depths[nu] = c
    out = WeightMultiset(rd, lam, tuple(entries))
    out.__dict__["depths"] = depths  # Freudenthal already knows them
    assert out.dim == weyl_dimension(rd, lam), "Freudenthal disagrees with the Weyl dimension formula"
    return out


# -- subspaces ----------------------------------------------------------------


def _coset_test(V: WeightMultiset, base: Sequence, subset: Iterable[int], above: bool):
    """Predicate on weights ``nu`` of ``V``: ``nu - base`` has integral root
    coordinates that vanish off ``subset`` (or, with ``above``, are merely
    nonnegative there)."""
    rd = V.rd
    subset = set(rd.check_subset(subset))
    off = [i for i in rd.index_set if i not in subset]
    cb = _root_coords(rd, linalg.sub(V.highest, base))
    depths = V.depths
    if cb is None or any(Fraction(x).denominator != 1 for x in cb):
        return lambda nu: False

    def test(nu) -> bool:
        d = depths.get(tuple(nu))
        if d is None or any(getattr(x, "denominator", 1) != 1 for x in d):
            return False
        c = [x - y for x, y in zip(cb, d)]
        if above:
            return all(c[i] >= 0 for i in off)
        return all(c[i] == 0 for i in off)

    return test


def subspace_mod_RM(V: WeightMultiset, subset: Iterable[int]) -> WeightMultiset:
    """Weights in ``highest + Z R_M``."""
    return V.restrict(_coset_test(V, V.highest, subset, above=False))


@dataclass(frozen=True)
class BruhatDims:
    source: int  # V[lambda + Z R_L2]
    above: int  # V[>= (w lambda + Z R_L1)]
    strictly_above: int  # V[> (w lambda + Z R_L1)]
    target: int  # V[w lambda + Z R_L1]

    def to_json(self) -> dict:
        return {"source": self.source, "geq": self.above, "gt": self.strictly_above, "target": self.target}


def bruhat_subspaces(V: WeightMultiset, lp: LeviPair) -> BruhatDims:
    rd = V.rd
    wl = lp.w.act_weight(V.highest)
    source = subspace_mod_RM(V, lp.I_L2)
    geq = V.restrict(_coset_test(V, wl, lp.I_L1, above=True))
    coset = _coset_test(V, wl, lp.I_L1, above=False)
    gt = geq.restrict(lambda nu: not coset(nu))
    target = V.restrict(coset)
    assert target.dim == geq.dim - gt.dim
    return BruhatDims(source.dim, geq.dim, gt.dim, target.dim)


# -- filtration by slope --------------------------------------------------------


@dataclass(frozen=True)
class FiltrationLevel:
    q: Fraction
    weights: WeightMultiset

    @property
    def dim(self) -> int:
        return self.weights.dim

    def to_json(self) -> dict:
        from .slope import fmt

        return {"q": fmt(self.q), "dim": self.dim, "weights": self.weights.to_json()["weights"]}


def _coords(s) -> Tuple:
    return tuple(getattr(s, "coords", s))


def filtration_levels(V: WeightMultiset, phi) -> List[FiltrationLevel]:
    """Group weights by their pairing with ``phi``, largest pairing first."""
    from .slope import regularity_failures

    rd = V.rd
    bad = regularity_failures(phi)
    if bad:
        raise ValueError(f"slope is not dominant regular: <phi, alpha_j> <= 0 for j in {bad}")
    central = [i for i in phi.subset if dot(phi.coords, rd.simple_roots[i]) != 0]
    if central:
        raise ValueError(f"slope pairs nontrivially with Levi roots {central}")
    groups: Dict[Fraction, List] = defaultdict(list)
    for w, m in V.entries:
        groups[canon(Fraction(dot(phi.coords, w)))].append((w, m))
    levels = [
        FiltrationLevel(q, WeightMultiset(rd, V.highest, tuple(groups[q])))
        for q in sorted(groups, reverse=True)
    ]
    if levels:
        top = subspace_mod_RM(V, phi.subset)
        assert levels[0].weights.entries == top.entries, "top level is not V[lambda + Z R_M]"
    return levels


def assoc_degree(V: WeightMultiset, s) -> Fraction:
    return canon(Fraction(dot(_coords(s), V.weight_sum())))


def assoc_slope_top(V: WeightMultiset, s) -> Fraction:
    return canon(Fraction(dot(_coords(s), V.highest)))
