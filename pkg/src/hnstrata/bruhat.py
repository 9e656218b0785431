"""Minimal double coset representatives and the Levi subsets they induce.

Everything is root-level: subgroups are represented by their root sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .linalg import matmul
from .rootdata import RootDatum, WeylElement


@dataclass(frozen=True)
class CosetSetup:
    rd: RootDatum
    I_M1: Tuple[int, ...]
    I_M2: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "I_M1", self.rd.check_subset(self.I_M1))
        object.__setattr__(self, "I_M2", self.rd.check_subset(self.I_M2))


@dataclass(frozen=True)
class LeviPair:
    w: WeylElement
    I_L1: Tuple[int, ...]
    I_L2: Tuple[int, ...]


def _image(w: WeylElement, roots: Iterable) -> frozenset:
    return frozenset(w.act_weight(r) for r in roots)


def _preimage(w: WeylElement, roots: Iterable) -> frozenset:
    return frozenset(w.inverse().act_weight(r) for r in roots)


def is_min_rep(setup: CosetSetup, w: WeylElement) -> bool:
    """Positivity test: ``w^-1`` keeps the simple roots of ``M1`` positive and
    ``w`` keeps those of ``M2`` positive."""
    rd = setup.rd
    winv = w.inverse()
    return all(rd.is_positive_root(winv.act_weight(rd.simple_roots[i])) for i in setup.I_M1) and all(
        rd.is_positive_root(w.act_weight(rd.simple_roots[i])) for i in setup.I_M2
    )


def parabolic_subgroup(rd: RootDatum, subset: Iterable[int]) -> Tuple[WeylElement, ...]:
    subset = set(subset)
    return tuple(w for w in rd.weyl_group if all(i in subset for i in w.word))


def min_reps(setup: CosetSetup) -> List[WeylElement]:
    """One element per double coset ``W_M1 \\ W / W_M2``, by (length, word)."""
    return [w for w in setup.rd.weyl_group if is_min_rep(setup, w)]


def double_cosets(setup: CosetSetup) -> List[frozenset]:
    """Brute-force partition of W into double cosets (test oracle)."""
    rd = setup.rd
    left = parabolic_subgroup(rd, setup.I_M1)
    right = parabolic_subgroup(rd, setup.I_M2)
    lookup = rd.weyl_lookup
    seen = set()
    out = []
    for w in rd.weyl_group:
        if w.matrix in seen:
            continue
        coset = set()
        for a in left:
            aw = matmul(a.matrix, w.matrix)
            for b in right:
                coset.add(matmul(aw, b.matrix))
        seen |= coset
        out.append(frozenset(lookup[m] for m in coset))
    return out


def deeper_levi_sets(setup: CosetSetup, w: WeylElement) -> LeviPair:
    rd = setup.rd
    if not is_min_rep(setup, w):
        raise ValueError(f"{w.word_str()} is not a minimal double coset representative")
    simple = {r: i for i, r in enumerate(rd.simple_roots)}
    winv = w.inverse()
    I_L1 = tuple(
        sorted(
            i
            for i in setup.I_M1
            if any(simple.get(w.act_weight(rd.simple_roots[j])) == i for j in setup.I_M2)
        )
    )
    I_L2 = tuple(
        sorted(
            i
            for i in setup.I_M2
            if any(simple.get(winv.act_weight(rd.simple_roots[j])) == i for j in setup.I_M1)
        )
    )
    lp = LeviPair(w, I_L1, I_L2)
    images = sorted(simple[w.act_weight(rd.simple_roots[j])] for j in I_L2)
    assert tuple(images) == I_L1, "w does not match the Levi simple roots"
    return lp


def verify_root_identities(setup: CosetSetup, w: WeylElement) -> Dict[str, bool]:
    """Root-level checks attached to a minimal representative.

    Keys:
      ``positivity``            w^-1 and w keep the Levi simple roots positive
      ``simple_to_simple``      a Levi simple root carried into the other Levi
                                root system lands on a simple root
      ``levi_roots_1``          R_L1 = R_M1 & w(R_M2)
      ``levi_roots_2``          R_L2 = w^-1(R_M1) & R_M2
      ``intersection_in_Q1``    (R_M1 | R+) & w(R_M2 | R+) <= R+ | R_L1
      ``intersection_in_Q2``    (R_M2 | R+) & w^-1(R_M1 | R+) <= R+ | R_L2
      ``unipotent_in_U_Q2``     w^-1(R+ - R_L1) & (R+ | R_L2) <= R+ - R_L2
      ``levi_conjugate``        w(R_L2) = R_L1
    """
    rd = setup.rd
    winv = w.inverse()
    lp = deeper_levi_sets(setup, w) if is_min_rep(setup, w) else LeviPair(w, (), ())
    R_plus = frozenset(rd.positive_roots)
    R_M1 = rd.roots_of(setup.I_M1)
    R_M2 = rd.roots_of(setup.I_M2)
    R_L1 = rd.roots_of(lp.I_L1)
    R_L2 = rd.roots_of(lp.I_L2)
    simple = set(rd.simple_roots)

    def simple_to_simple() -> bool:
        for i in setup.I_M1:
            b = winv.act_weight(rd.simple_roots[i])
            if b in R_M2 and b not in simple:
                return False
        for i in setup.I_M2:
            b = w.act_weight(rd.simple_roots[i])
            if b in R_M1 and b not in simple:
                return False
        return True

    return {
        "positivity": is_min_rep(setup, w),
        "simple_to_simple": simple_to_simple(),
        "levi_roots_1": R_L1 == R_M1 & _image(w, R_M2),
        "levi_roots_2": R_L2 == _preimage(w, R_M1) & R_M2,
        "intersection_in_Q1": (R_M1 | R_plus) & _image(w, R_M2 | R_plus) <= R_plus | R_L1,
        "intersection_in_Q2": (R_M2 | R_plus) & _preimage(w, R_M1 | R_plus) <= R_plus | R_L2,
        "unipotent_in_U_Q2": _preimage(w, R_plus - R_L1) & (R_plus | R_L2) <= R_plus - R_L2,
        "levi_conjugate": _image(w, R_L2) == R_L1,
    }
