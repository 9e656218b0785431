"""Exhaustive and sampled property sweeps.

Each sweep returns a :class:`SweepResult`; a sweep passes when it records no
failures.  The ``verify`` subcommand and the acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import bruhat, lattice, p1, reps, slope, strata
from .rootdata import (
    RootDatum,
    adjoint,
    finite_types_up_to_rank,
    fundamental_coweights,
    gl,
    simply_connected,
)

MAX_REPORTED = 10


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(msg)
        else:
            self.failures[-1] = f"... and more (last: {msg})"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": list(self.failures),
            "seconds": round(self.seconds, 3),
        }


def _timed(fn: Callable[..., SweepResult]) -> Callable[..., SweepResult]:
    def wrapper(*args, **kw) -> SweepResult:
        t = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def subsets(rd: RootDatum):
    idx = rd.index_set
    for k in range(len(idx) + 1):
        yield from itertools.combinations(idx, k)


def data_up_to_rank(max_rank: int, with_gl: bool = True) -> List[RootDatum]:
    """Simply connected data of every finite type up to ``max_rank``, plus
    ``GL(n)`` with semisimple rank up to ``max_rank``."""
    out = [simply_connected(t) for t in finite_types_up_to_rank(max_rank)]
    if with_gl:
        out += [gl(n) for n in range(1, max_rank + 2)]
    return out


def _dominant_weights(rd: RootDatum, coeff: int):
    """Dominant integral weights with fundamental-weight coordinates in
    ``[0, coeff]``.  Only for data whose coroots are a standard basis block."""
    from .rootdata import fundamental_weights

    fw = fundamental_weights(rd)
    for p in itertools.product(range(coeff + 1), repeat=rd.semisimple_rank):
        lam = [0] * rd.rank
        for c, w in zip(p, fw):
            for k, x in enumerate(w):
                lam[k] += c * x
        if all(Fraction(x).denominator == 1 for x in lam):
            yield tuple(int(x) for x in lam)


# -- 1 -------------------------------------------------------------------------


def gl_block_slope(n: int, I_M, v) -> tuple:
    """Per-coordinate slope of a flag in GL(n): each block carries its average
    degree, repeated once per coordinate of the block."""
    out = []
    start = 0
    for i in range(n):
        if i == n - 1 or i not in I_M:
            block = v[start:i + 1]
            mu = Fraction(sum(block), len(block))
            out.extend([mu] * len(block))
            start = i + 1
    return tuple(out)


@_timed
def sweep_gl_slope_formula(max_n: int = 5, samples: int = 20, seed: int = 0) -> SweepResult:
    res = SweepResult("gl_slope_formula")
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        rd = gl(n)
        for _ in range(samples):
            I_M = tuple(i for i in range(n - 1) if rng.random() < 0.5)
            v = tuple(rng.randint(-6, 6) for _ in range(n))
            got = slope.phi_of_lift(rd, I_M, v).coords
            want = gl_block_slope(n, I_M, v)
            res.checked += 1
            if tuple(Fraction(x) for x in got) != want:
                res.fail(f"GL({n}) I_M={I_M} v={v}: {got} != {want}")
    return res


# -- 2 -------------------------------------------------------------------------


@_timed
def sweep_coroot_cone(max_rank: int = 4) -> SweepResult:
    res = SweepResult("coroot_cone")
    types = finite_types_up_to_rank(max_rank)
    data = [simply_connected(t) for t in types] + [adjoint(t) for t in types]
    data += [gl(n) for n in range(1, max_rank + 2)]
    for rd in data:
        for I_M in subsets(rd):
            for j in rd.complement(I_M):
                res.checked += 1
                try:
                    slope.phi_of_simple_coroot(rd, I_M, j)
                except AssertionError as e:
                    res.fail(f"{rd.name} I_M={I_M} j={j}: {e}")
    return res


# -- 3 -------------------------------------------------------------------------


@_timed
def sweep_bruhat(max_rank: int = 3) -> SweepResult:
    res = SweepResult("bruhat")
    for rd in data_up_to_rank(max_rank, with_gl=False):
        subs = list(subsets(rd))
        for a in subs:
            for b in subs:
                setup = bruhat.CosetSetup(rd, a, b)
                reps_ = bruhat.min_reps(setup)
                res.checked += 1
                n_cosets = len(bruhat.double_cosets(setup))
                if len(reps_) != n_cosets:
                    res.fail(f"{rd.name} {a}/{b}: {len(reps_)} reps vs {n_cosets} cosets")
                for w in reps_:
                    res.checked += 1
                    try:
                        report = bruhat.verify_root_identities(setup, w)
                    except AssertionError as e:
                        res.fail(f"{rd.name} {a}/{b} w={w.word}: {e}")
                        continue
                    bad = [k for k, ok in report.items() if not ok]
                    if bad:
                        res.fail(f"{rd.name} {a}/{b} w={w.word}: {bad}")
    return res


# -- 4 -------------------------------------------------------------------------


@_timed
def sweep_weyl_dimension(max_rank: int = 3, samples: int = 50, coeff: int = 3, seed: int = 0) -> SweepResult:
    res = SweepResult("weyl_dimension")
    rng = random.Random(seed)
    for t in finite_types_up_to_rank(max_rank):
        rd = simply_connected(t)
        for _ in range(samples):
            lam = tuple(rng.randint(0, coeff) for _ in range(rd.rank))
            res.checked += 1
            try:
                V = reps.weyl_weights(rd, lam)
            except AssertionError as e:
                res.fail(f"{t} {lam}: {e}")
                continue
            if V.dim != reps.weyl_dimension(rd, lam):
                res.fail(f"{t} {lam}: dim {V.dim}")
    sl3 = simply_connected("A2")
    V = reps.weyl_weights(sl3, (1, 1))
    res.checked += 1
    if V.mult((0, 0)) != 2 or V.dim != 8:
        res.fail(f"SL(3) adjoint: zero weight multiplicity {V.mult((0, 0))}, dim {V.dim}")
    return res


@_timed
def sweep_weyl_invariance(max_rank: int = 3, samples: int = 5, coeff: int = 2, seed: int = 0) -> SweepResult:
    res = SweepResult("weyl_invariance")
    rng = random.Random(seed)
    for rd in data_up_to_rank(max_rank):
        for _ in range(samples):
            lam = rng.choice(list(_dominant_weights(rd, coeff)))
            V = reps.weyl_weights(rd, lam)
            mult = V.as_dict()
            for w in rd.weyl_group:
                res.checked += 1
                if any(mult.get(w.act_weight(nu), 0) != m for nu, m in V.entries):
                    res.fail(f"{rd.name} {lam} w={w.word}")
    return res


# -- 5 -------------------------------------------------------------------------


@_timed
def sweep_one_dimensional(max_rank: int = 3, coeff: int = 3) -> SweepResult:
    res = SweepResult("one_dimensional")
    for rd in data_up_to_rank(max_rank):
        for lam in _dominant_weights(rd, coeff):
            V = reps.weyl_weights(rd, lam)
            for I_M in subsets(rd):
                res.checked += 1
                one = reps.subspace_mod_RM(V, I_M).dim == 1
                inside = lattice.in_weight_sublattice(rd, I_M, lam)
                if one != inside:
                    res.fail(f"{rd.name} {lam} I_M={I_M}: dim-1 {one}, in sublattice {inside}")
    return res


# -- 6 -------------------------------------------------------------------------


@_timed
def sweep_destabilizing(max_rank: int = 3, coeff: int = 3) -> SweepResult:
    res = SweepResult("destabilizing")
    full = None
    for rd in data_up_to_rank(max_rank):
        full = lattice.quotient_lattice(rd, rd.index_set)
        for I_M in subsets(rd):
            for v in itertools.product(range(-coeff, coeff + 1), repeat=rd.rank):
                res.checked += 1
                try:
                    strata.is_destabilizing(rd, I_M, v, full.project(v))
                except AssertionError as e:
                    res.fail(f"{rd.name} I_M={I_M} v={v}: {e}")
    return res


# -- 7 -------------------------------------------------------------------------


def random_regular_slope(rd: RootDatum, I_M, rng: random.Random) -> tuple:
    """A rational coweight orthogonal to the Levi roots and strictly
    positive on the other simple roots."""
    fc = fundamental_coweights(rd)
    out = [Fraction(0)] * rd.rank
    for j in rd.complement(I_M):
        c = Fraction(rng.randint(1, 12), rng.randint(1, 4))
        out = [x + c * y for x, y in zip(out, fc[j])]
    # central part: anything the roots cannot see
    if rd.rank > rd.semisimple_rank:
        from .linalg import solve

        rows = [tuple(r) for r in rd.simple_roots]
        for _ in range(3):
            z = [Fraction(rng.randint(-3, 3)) for _ in range(rd.rank)]
            # project z onto the common kernel of the roots
            if rows:
                gram = [[sum(a * b for a, b in zip(r, s)) for s in rows] for r in rows]
                coef = solve(gram, [sum(a * b for a, b in zip(r, z)) for r in rows])
                z = [x - sum(c * r[k] for c, r in zip(coef, rows)) for k, x in enumerate(z)]
            out = [x + y for x, y in zip(out, z)]
    return tuple(out)


@_timed
def sweep_w1_inequality(max_rank: int = 3, samples: int = 3, seed: int = 0) -> SweepResult:
    res = SweepResult("w1_inequality")
    rng = random.Random(seed)
    for rd in data_up_to_rank(max_rank):
        subs = list(subsets(rd))
        for a in subs:
            for b in subs:
                setup = bruhat.CosetSetup(rd, a, b)
                for w in bruhat.min_reps(setup):
                    for _ in range(samples):
                        phi = random_regular_slope(rd, a, rng)
                        moved = w.inverse().act_coweight(phi)
                        s1 = slope.SlopeVector(phi, a, rd)
                        s2 = slope.SlopeVector(moved, a, rd)
                        res.checked += 1
                        geq = slope.slope_geq(s1, s2)
                        eq = slope.slope_equal(s1, s2)
                        if not geq or eq != w.is_identity():
                            res.fail(f"{rd.name} {a}/{b} w={w.word} phi={phi}: geq={geq} eq={eq}")
    return res


@_timed
def sweep_bruhat_dims(max_rank: int = 3, samples: int = 2, coeff: int = 2, seed: int = 0) -> SweepResult:
    res = SweepResult("bruhat_dims")
    rng = random.Random(seed)
    for rd in data_up_to_rank(max_rank):
        weights = list(_dominant_weights(rd, coeff))
        modules = [reps.weyl_weights(rd, rng.choice(weights)) for _ in range(samples)]
        subs = list(subsets(rd))
        for a in subs:
            for b in subs:
                setup = bruhat.CosetSetup(rd, a, b)
                for w in bruhat.min_reps(setup):
                    lp = bruhat.deeper_levi_sets(setup, w)
                    for V in modules:
                        d = reps.bruhat_subspaces(V, lp)
                        res.checked += 1
                        if d.source != d.target:
                            res.fail(f"{rd.name} {a}/{b} w={w.word} {V.highest}: {d}")
    return res


# -- 8 - 11 --------------------------------------------------------------------


def _types_in_box(max_n: int, box: int):
    for n in range(1, max_n + 1):
        for d in itertools.combinations_with_replacement(range(box, -box - 1, -1), n):
            yield p1.SplittingType(d)


@_timed
def sweep_p1_specialization(max_n: int = 4, box: int = 3, gl2_box: int = 6) -> SweepResult:
    res = SweepResult("p1_specialization")
    for n in range(1, max_n + 1):
        types = [t for t in _types_in_box(n, box) if t.rank == n]
        for a in types:
            for b in types:
                res.checked += 1
                if p1.specializes_to(a, b) != p1.specializes_to_bruteforce(a, b):
                    res.fail(f"{a} -> {b}")
    for d in range(4):
        rep = p1.strata_poset(2, d, gl2_box)
        res.checked += 1
        chain = all(b.degrees[0] == a.degrees[0] + 1 for a, b in rep.edges)
        if not (rep.gl2_closure and chain and len(rep.edges) == len(rep.nodes) - 1):
            res.fail(f"GL(2) degree {d}: closure chain broken")
    return res


@_timed
def sweep_p1_comparison(max_n: int = 4, box: int = 3) -> SweepResult:
    res = SweepResult("p1_comparison")
    for t in _types_in_box(max_n, box):
        res.checked += 1
        if not p1.comparison_holds(t):
            res.fail(f"{t}: canonical slope does not dominate the permutation flags")
    for n in range(1, max_n + 1):
        for d in range(-box * n, box * n + 1):
            rep = p1.strata_poset(n, d, box)
            res.checked += len(rep.edges)
            if not rep.monotone:
                res.fail(f"n={n} d={d}: canonical slope not monotone")
            if rep.edges != tuple(p1.transitive_reduction_edges(rep.nodes)):
                res.fail(f"n={n} d={d}: covering edges disagree with the transitive reduction")
    return res


@_timed
def sweep_filtration_hn(max_n: int = 4, box: int = 3) -> SweepResult:
    res = SweepResult("filtration_hn")
    for t in _types_in_box(max_n, box):
        res.checked += 1
        if not p1.filtration_matches_hn(t):
            res.fail(f"{t}")
    return res


@_timed
def sweep_mds(max_n: int = 4, box: int = 3) -> SweepResult:
    res = SweepResult("mds_hom_vanishing")
    for t in _types_in_box(max_n, box):
        res.checked += 1
        try:
            p1.mds_hom_vanishing(t)
        except AssertionError as e:
            res.fail(str(e))
    return res


# -- 12, 13 --------------------------------------------------------------------


@_timed
def sweep_torsion(max_n: int = 4) -> SweepResult:
    res = SweepResult("pgl_torsion")
    for n in range(2, max_n + 1):
        rd = adjoint(f"A{n - 1}")
        ql = lattice.quotient_lattice(rd, rd.index_set)
        res.checked += 1
        if ql.torsion_order != n or ql.free_rank != 0:
            res.fail(f"PGL({n}): torsion {ql.torsion_invariants}, free rank {ql.free_rank}")
    return res


@_timed
def sweep_gl3_skeleton() -> SweepResult:
    res = SweepResult("gl3_skeleton")
    rd = gl(3)
    a = strata.make_stratum(rd, (), (2, 1, 0))
    b = strata.make_stratum(rd, (1,), (3, 0))
    res.checked += 1
    if not strata.closure_meets_necessary(a, b):
        res.fail("closure of the complete-flag stratum should meet the (3,0) stratum")
    res.checked += 1
    try:
        strata.closure_same_parabolic_contains(a, b)
        res.fail("same-parabolic closure accepted distinct parabolics")
    except ValueError:
        pass
    rep = p1.gl3_report()
    res.checked += 1
    if rep["closure_meets"]["value"] is not True or "refuted" not in rep["containment"]:
        res.fail(f"report: {rep}")
    return res


@_timed
def sweep_enumeration(max_rank: int = 2, bound: int = 2) -> SweepResult:
    """Enumeration is monotone in the bound, duplicate-free, and always
    contains the semistable index."""
    res = SweepResult("enumeration")
    for rd in data_up_to_rank(max_rank):
        full = lattice.quotient_lattice(rd, rd.index_set)
        lifts = [v for v in itertools.product(range(-1, 2), repeat=rd.rank)][:9]
        seen_classes = set()
        for v in lifts:
            lg = full.project(v)
            if lg in seen_classes:
                continue
            seen_classes.add(lg)
            prev = None
            for b in range(bound + 1):
                cur = strata.enumerate_strata(rd, lg, b)
                keys = [s.key() for s in cur]
                res.checked += 1
                if len(set(keys)) != len(keys):
                    res.fail(f"{rd.name} {v} bound {b}: duplicates")
                if (rd.index_set, lg.free, lg.torsion) not in keys:
                    res.fail(f"{rd.name} {v} bound {b}: semistable index missing")
                if prev is not None and not prev <= set(keys):
                    res.fail(f"{rd.name} {v} bound {b}: not monotone")
                prev = set(keys)
    return res


SWEEPS: Dict[str, Callable[..., SweepResult]] = {
    "gl_slope_formula": sweep_gl_slope_formula,
    "coroot_cone": sweep_coroot_cone,
    "bruhat": sweep_bruhat,
    "weyl_dimension": sweep_weyl_dimension,
    "weyl_invariance": sweep_weyl_invariance,
    "one_dimensional": sweep_one_dimensional,
    "destabilizing": sweep_destabilizing,
    "w1_inequality": sweep_w1_inequality,
    "bruhat_dims": sweep_bruhat_dims,
    "p1_specialization": sweep_p1_specialization,
    "p1_comparison": sweep_p1_comparison,
    "filtration_hn": sweep_filtration_hn,
    "mds_hom_vanishing": sweep_mds,
    "pgl_torsion": sweep_torsion,
    "gl3_skeleton": sweep_gl3_skeleton,
    "enumeration": sweep_enumeration,
}


def run_all(max_rank: int = 3, box: int = 3, seed: int = 0, only: Optional[List[str]] = None) -> List[SweepResult]:
    """Run the sweeps at the given rank (``coroot_cone`` uses one more) and box."""
    plan = {
        "gl_slope_formula": dict(max_n=max_rank + 2, seed=seed),
        "coroot_cone": dict(max_rank=max_rank + 1),
        "bruhat": dict(max_rank=max_rank),
        "weyl_dimension": dict(max_rank=max_rank, coeff=box, seed=seed),
        "weyl_invariance": dict(max_rank=max_rank, seed=seed),
        "one_dimensional": dict(max_rank=max_rank, coeff=box),
        "destabilizing": dict(max_rank=max_rank, coeff=box),
        "w1_inequality": dict(max_rank=max_rank, seed=seed),
        "bruhat_dims": dict(max_rank=max_rank, seed=seed),
        "p1_specialization": dict(max_n=max_rank + 1, box=box, gl2_box=2 * box),
        "p1_comparison": dict(max_n=max_rank + 1, box=box),
        "filtration_hn": dict(max_n=max_rank + 1, box=box),
        "mds_hom_vanishing": dict(max_n=max_rank + 1, box=box),
        "pgl_torsion": dict(max_n=max_rank + 1),
        "gl3_skeleton": {},
        "enumeration": dict(max_rank=min(max_rank, 2)),
    }
    names = only or list(SWEEPS)
    unknown = [n for n in names if n not in SWEEPS]
    if unknown:
        raise ValueError(f"unknown sweeps: {unknown}")
    return [SWEEPS[n](**plan[n]) for n in names]
