"""Root data, Weyl groups and the dominance order.

A root datum is stored as a dual pair of integer lattices ``Z^n`` (weights
and coweights) with the standard dot product as pairing.  Simple roots live
in weight coordinates, simple coroots in coweight coordinates.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .linalg import canon_vec, dot

DEFAULT_WEYL_CAP = 10**6

IntVec = Tuple[int, ...]


class CapExceededError(RuntimeError):
    """A Weyl group (or derived enumeration) is larger than the configured cap."""


# --------------------------------------------------------------------------
# Cartan matrices of the irreducible finite types
# --------------------------------------------------------------------------

_RANK_LIMIT = 16


def _chain(r: int) -> List[List[int]]:
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        if i + 1 < r:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(letter: str, r: int) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix ``A[i][j] = <coroot_i, root_j>`` in Bourbaki labelling."""
    letter = letter.upper()
    bounds = {"A": 1, "B": 2, "C": 2, "D": 4}
    if letter in bounds:
        if not bounds[letter] <= r <= _RANK_LIMIT:
            raise ValueError(f"rank out of supported range for type {letter}: {r}")
    elif letter == "E":
        if r not in (6, 7, 8):
            raise ValueError(f"type E requires rank 6, 7 or 8, got {r}")
    elif letter == "F":
        if r != 4:
            raise ValueError(f"type F requires rank 4, got {r}")
    elif letter == "G":
        if r != 2:
            raise ValueError(f"type G requires rank 2, got {r}")
    else:
        raise ValueError(f"unknown Cartan type letter {letter!r}")

    if letter == "A":
        a = _chain(r)
    elif letter == "B":
        # last simple root short
        a = _chain(r)
        a[r - 1][r - 2] = -2
    elif letter == "C":
        # last simple root long
        a = _chain(r)
        a[r - 2][r - 1] = -2
    elif letter == "D":
        a = _chain(r)
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif letter == "E":
        a = [[0] * r for _ in range(r)]
        for i in range(r):
            a[i][i] = 2
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, r - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    elif letter == "F":
        a = _chain(4)
        a[2][1] = -2
    else:  # G2, first simple root short
        a = [[2, -3], [-1, 2]]
    return tuple(map(tuple, a))


_TYPE_RE = re.compile(r"([A-Ga-g])(\d+)")


def parse_cartan_type(spec: str) -> List[Tuple[str, int]]:
    """``"A1xB2"`` -> ``[("A", 1), ("B", 2)]``."""
    parts = [p for p in re.split(r"[x×*+ ]+", spec.strip()) if p]
    if not parts:
        raise ValueError(f"empty Cartan type {spec!r}")
    out = []
    for p in parts:
        m = _TYPE_RE.fullmatch(p)
        if not m:
            raise ValueError(f"malformed Cartan type component {p!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


def block_cartan(components: Sequence[Tuple[str, int]]):
    blocks = [cartan_matrix(l, r) for l, r in components]
    m = sum(len(b) for b in blocks)
    a = [[0] * m for _ in range(m)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                a[off + i][off + j] = x
        off += len(b)
    return tuple(map(tuple, a))


# --------------------------------------------------------------------------
# Weyl group elements
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """An element of W, stored as its matrix on the weight lattice.

    Equality is matrix equality; ``word`` is one reduced word (the
    lexicographically smallest one when produced by :func:`weyl_elements`).
    Words read like compositions: ``(1, 0)`` is ``s_1 s_0``, so ``s_0`` acts
    first.
    """

    matrix: Tuple[IntVec, ...]
    word: Tuple[int, ...] = field(compare=False, default=())

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def coweight_matrix(self) -> Tuple[IntVec, ...]:
        return linalg.transpose(linalg.int_inverse(self.matrix))

    @cached_property
    def inverse_matrix(self) -> Tuple[IntVec, ...]:
        return linalg.int_inverse(self.matrix)

    @cached_property
    def _inverse(self) -> "WeylElement":
        return WeylElement(self.inverse_matrix, tuple(reversed(self.word)))

    def inverse(self) -> "WeylElement":
        return self._inverse

    def is_identity(self) -> bool:
        return self.matrix == linalg.identity(len(self.matrix))

    def act_weight(self, v: Sequence) -> tuple:
        if len(v) != len(self.matrix):
            raise ValueError(f"dimension mismatch: {len(v)} vs {len(self.matrix)}")
        return canon_vec(linalg.matvec(self.matrix, v))

    def act_coweight(self, v: Sequence) -> tuple:
        if len(v) != len(self.matrix):
            raise ValueError(f"dimension mismatch: {len(v)} vs {len(self.matrix)}")
        return canon_vec(linalg.matvec(self.coweight_matrix, v))

    def word_str(self) -> str:
        return " ".join(f"s{i}" for i in self.word) if self.word else "e"


def act(w: WeylElement, v: Sequence, side: str = "weight") -> tuple:
    """Apply ``w`` to a weight (matrix action) or a coweight (contragredient)."""
    if side == "weight":
        return w.act_weight(v)
    if side == "coweight":
        return w.act_coweight(v)
    raise ValueError(f"side must be 'weight' or 'coweight', got {side!r}")


# --------------------------------------------------------------------------
# Root datum
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RootDatum:
    rank: int
    simple_roots: Tuple[IntVec, ...]
    simple_coroots: Tuple[IntVec, ...]
    name: str = field(default="", compare=False)
    weyl_cap: int = field(default=DEFAULT_WEYL_CAP, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "simple_roots", tuple(tuple(int(x) for x in r) for r in self.simple_roots))
        object.__setattr__(self, "simple_coroots", tuple(tuple(int(x) for x in r) for r in self.simple_coroots))
        n = self.rank
        if n < 1:
            raise ValueError("rank must be positive")
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("need as many simple coroots as simple roots")
        if len(self.simple_roots) > n:
            raise ValueError("more simple roots than the rank")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != n:
                raise ValueError(f"vector {v} does not have length {n}")
        a = self.cartan
        m = len(a)
        for i in range(m):
            if a[i][i] != 2:
                raise ValueError(f"<coroot_{i}, root_{i}> = {a[i][i]}, expected 2")
            for j in range(m):
                if i != j:
                    if a[i][j] > 0:
                        raise ValueError(f"positive off-diagonal Cartan entry at ({i},{j})")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise ValueError(f"Cartan matrix not symmetric in zeros at ({i},{j})")
        for k in range(1, m + 1):
            for sub in combinations(range(m), k):
                if linalg.determinant([[a[i][j] for j in sub] for i in sub]) <= 0:
                    raise ValueError("Cartan matrix is not of finite type")
        if linalg.rank(self.simple_roots) != m or linalg.rank(self.simple_coroots) != m:
            raise ValueError("simple roots / coroots are not linearly independent")

    # ---- basic data -----------------------------------------------------

    @property
    def index_set(self) -> Tuple[int, ...]:
        return tuple(range(len(self.simple_roots)))

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan(self) -> Tuple[IntVec, ...]:
        return tuple(
            tuple(dot(c, r) for r in self.simple_roots) for c in self.simple_coroots
        )

    @cached_property
    def symmetrizer(self) -> Tuple[Fraction, ...]:
        """``eps_i = (alpha_i, alpha_i) / 2`` for a W-invariant form, so
        ``eps_i A[i][j]`` is symmetric; normalised to 1 on one root per component."""
        a = self.cartan
        m = len(a)
        eps: List[Optional[Fraction]] = [None] * m
        for start in range(m):
            if eps[start] is not None:
                continue
            eps[start] = Fraction(1)
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(m):
                    if j != i and a[i][j] != 0 and eps[j] is None:
                        eps[j] = eps[i] * Fraction(a[i][j], a[j][i])
                        queue.append(j)
        return tuple(eps)

    def pairing(self, coweight: Sequence, weight: Sequence):
        return dot(coweight, weight)

    # ---- roots ----------------------------------------------------------

    @cached_property
    def positive_root_coords(self) -> Tuple[IntVec, ...]:
        """Positive roots in simple-root coordinates, by (height, coords)."""
        return _positive_roots_from_cartan(self.cartan)

    @cached_property
    def positive_coroot_coords(self) -> Tuple[IntVec, ...]:
        return _positive_roots_from_cartan(linalg.transpose(self.cartan, len(self.cartan)))

    def root_from_coords(self, c: Sequence[int]) -> IntVec:
        return linalg.lincomb(c, self.simple_roots, self.rank)

    def coroot_from_coords(self, c: Sequence[int]) -> IntVec:
        return linalg.lincomb(c, self.simple_coroots, self.rank)

    @cached_property
    def positive_roots(self) -> Tuple[IntVec, ...]:
        return tuple(self.root_from_coords(c) for c in self.positive_root_coords)

    @cached_property
    def positive_coroots(self) -> Tuple[IntVec, ...]:
        return tuple(self.coroot_from_coords(c) for c in self.positive_coroot_coords)

    @cached_property
    def root_coords(self) -> Dict[IntVec, IntVec]:
        """Map every root (weight coordinates) to its simple-root coordinates."""
        out = {}
        for c, r in zip(self.positive_root_coords, self.positive_roots):
            out[r] = c
            out[tuple(-x for x in r)] = tuple(-x for x in c)
        return out

    @cached_property
    def roots(self) -> frozenset:
        return frozenset(self.root_coords)

    def roots_of(self, subset: Iterable[int], positive_only: bool = False) -> frozenset:
        """Roots of the Levi attached to ``subset`` (support inside the subset)."""
        s = set(subset)
        out = set()
        for r, c in self.root_coords.items():
            if all(x == 0 for k, x in enumerate(c) if k not in s):
                if not positive_only or sum(c) > 0:
                    out.add(r)
        return frozenset(out)

    def is_positive_root(self, v: Sequence) -> bool:
        c = self.root_coords.get(tuple(v))
        return c is not None and sum(c) > 0

    # ---- Weyl group -----------------------------------------------------

    @cached_property
    def simple_reflections(self) -> Tuple[WeylElement, ...]:
        n = self.rank
        out = []
        for i, (r, c) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            m = tuple(
                tuple((1 if a == b else 0) - r[a] * c[b] for b in range(n)) for a in range(n)
            )
            out.append(WeylElement(m, (i,)))
        return tuple(out)

    @cached_property
    def weyl_group(self) -> Tuple[WeylElement, ...]:
        return weyl_elements(self, cap=self.weyl_cap)

    @cached_property
    def weyl_lookup(self) -> Dict[Tuple[IntVec, ...], WeylElement]:
        return {w.matrix: w for w in self.weyl_group}

    def weyl_order(self) -> int:
        """|W| from the Cartan type, without enumerating."""
        order = 1
        for letter, r in self.cartan_components():
            order *= _weyl_order(letter, r)
        return order

    def cartan_components(self) -> List[Tuple[str, int]]:
        return identify_cartan_type(self.cartan)

    def element(self, word: Sequence[int]) -> WeylElement:
        """The Weyl element with the given (not necessarily reduced) word."""
        m = linalg.identity(self.rank)
        for i in word:
            m = linalg.matmul(m, self.simple_reflections[i].matrix)
        w = self.weyl_lookup.get(m)
        if w is None:
            raise ValueError("word does not give an element of W")
        return w

    @cached_property
    def longest_element(self) -> WeylElement:
        return self.weyl_group[-1]

    # ---- convenience ----------------------------------------------------

    def check_subset(self, subset: Iterable[int]) -> Tuple[int, ...]:
        s = tuple(sorted(set(subset)))
        for i in s:
            if not 0 <= i < self.semisimple_rank:
                raise ValueError(f"index {i} not in the index set {list(self.index_set)}")
        return s

    def complement(self, subset: Iterable[int]) -> Tuple[int, ...]:
        s = set(subset)
        return tuple(i for i in self.index_set if i not in s)

    def is_dominant_weight(self, weight: Sequence) -> bool:
        return all(dot(c, weight) >= 0 for c in self.simple_coroots)

    def is_dominant_coweight(self, coweight: Sequence) -> bool:
        return all(dot(coweight, r) >= 0 for r in self.simple_roots)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "simple_roots": [list(r) for r in self.simple_roots],
            "simple_coroots": [list(c) for c in self.simple_coroots],
        }


def _positive_roots_from_cartan(a) -> Tuple[IntVec, ...]:
    m = len(a)
    simple = [tuple(1 if k == i else 0 for k in range(m)) for i in range(m)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(m):
            if beta == simple[i]:
                continue
            p = sum(a[i][j] * beta[j] for j in range(m))
            if p == 0:
                continue
            gamma = tuple(b - (p if k == i else 0) for k, b in enumerate(beta))
            if all(x >= 0 for x in gamma) and gamma not in found:
                found.add(gamma)
                queue.append(gamma)
    return tuple(sorted(found, key=lambda c: (sum(c), c)))


def _weyl_order(letter: str, r: int) -> int:
    from math import factorial

    if letter == "A":
        return factorial(r + 1)
    if letter in "BC":
        return 2**r * factorial(r)
    if letter == "D":
        return 2 ** (r - 1) * factorial(r)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[
        (letter, r)
    ]


def identify_cartan_type(a) -> List[Tuple[str, int]]:
    """Decompose a finite-type Cartan matrix into irreducible components.

    Only the letter and rank are reported (enough for |W| and naming).
    """
    m = len(a)
    seen = [False] * m
    comps = []
    for s in range(m):
        if seen[s]:
            continue
        comp, queue = [], deque([s])
        seen[s] = True
        while queue:
            i = queue.popleft()
            comp.append(i)
            for j in range(m):
                if not seen[j] and a[i][j] != 0:
                    seen[j] = True
                    queue.append(j)
        sub = [[a[i][j] for j in comp] for i in comp]
        r = len(comp)
        prods = [sub[i][j] * sub[j][i] for i in range(r) for j in range(i + 1, r) if sub[i][j]]
        degrees = [sum(1 for j in range(r) if j != i and sub[i][j]) for i in range(r)]
        if 3 in prods:
            comps.append(("G", 2))
        elif 2 in prods:
            if r == 4 and prods.count(2) == 1 and max(degrees) == 2:
                # F4 has the double bond in the middle
                ends = [i for i in range(r) if degrees[i] == 1]
                dbl = [(i, j) for i in range(r) for j in range(r) if i < j and sub[i][j] * sub[j][i] == 2][0]
                comps.append(("F", 4) if all(k not in ends for k in dbl) else _bc(sub))
            else:
                comps.append(_bc(sub))
        elif max(degrees, default=0) == 3:
            comps.append(("E", r) if r >= 6 and _is_e(sub) else ("D", r))
        else:
            comps.append(("A", r))
    return comps


def _bc(sub) -> Tuple[str, int]:
    r = len(sub)
    for j in range(r):
        if any(sub[i][j] == -2 for i in range(r)):
            # column j holds the -2: alpha_j is the long root of the double bond
            is_end = sum(1 for k in range(r) if k != j and sub[j][k]) <= 1
            return ("C", r) if is_end and r > 2 else ("B", r)
    return ("B", r)


def _is_e(sub) -> bool:
    r = len(sub)
    deg = [sum(1 for j in range(r) if j != i and sub[i][j]) for i in range(r)]
    branch = deg.index(3)
    arms = []
    for nb in [j for j in range(r) if j != branch and sub[branch][j]]:
        length, prev, cur = 1, branch, nb
        while True:
            nxt = [k for k in range(r) if k not in (prev, cur) and sub[cur][k]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)[:2] == [1, 2]


# --------------------------------------------------------------------------
# Named constructors
# --------------------------------------------------------------------------


def gl(n: int, **kw) -> RootDatum:
    if not 1 <= n <= _RANK_LIMIT:
        raise ValueError(f"GL(n) requires 1 <= n <= {_RANK_LIMIT}, got {n}")
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(tuple(v))
    return RootDatum(n, tuple(roots), tuple(roots), name=f"GL({n})", **kw)


def simply_connected(cartan_type: str, **kw) -> RootDatum:
    """Coweight lattice = coroot lattice: coroots are the standard basis."""
    a = block_cartan(parse_cartan_type(cartan_type))
    m = len(a)
    coroots = linalg.identity(m)
    roots = tuple(tuple(a[i][j] for i in range(m)) for j in range(m))
    return RootDatum(m, roots, coroots, name=f"SimplyConnected({cartan_type})", **kw)


def adjoint(cartan_type: str, **kw) -> RootDatum:
    """Weight lattice = root lattice: roots are the standard basis."""
    a = block_cartan(parse_cartan_type(cartan_type))
    m = len(a)
    roots = linalg.identity(m)
    coroots = tuple(tuple(a[i][j] for j in range(m)) for i in range(m))
    return RootDatum(m, roots, coroots, name=f"Adjoint({cartan_type})", **kw)


_NAMED_RE = re.compile(r"^\s*([A-Za-z]+)\s*(?:[:(]\s*([A-Za-z0-9x×]+)\s*\)?)\s*$")

_ALIASES = {
    "GL": "GL",
    "SL": "SL",
    "PGL": "PGL",
    "SC": "SimplyConnected",
    "SIMPLYCONNECTED": "SimplyConnected",
    "AD": "Adjoint",
    "ADJOINT": "Adjoint",
}


def build_named(descriptor, **kw) -> RootDatum:
    """Build a root datum from ``"GL:3"``, ``"SL(4)"``, ``"SC:B2"``,
    ``"Adjoint(G2)"`` or a dict ``{"type": "GL", "n": 3}``."""
    if isinstance(descriptor, dict):
        kind = _ALIASES.get(str(descriptor.get("type", "")).upper())
        arg = descriptor.get("n", descriptor.get("cartan"))
        if kind is None or arg is None:
            raise ValueError(f"unknown group descriptor {descriptor!r}")
    else:
        m = _NAMED_RE.match(str(descriptor))
        if not m:
            raise ValueError(f"unknown group descriptor {descriptor!r}")
        kind = _ALIASES.get(m.group(1).upper())
        arg = m.group(2)
        if kind is None:
            raise ValueError(f"unknown group descriptor {descriptor!r}")
    if kind in ("GL", "SL", "PGL"):
        try:
            n = int(arg)
        except (TypeError, ValueError):
            raise ValueError(f"{kind} needs an integer size, got {arg!r}") from None
        if kind == "GL":
            return gl(n, **kw)
        if n < 2:
            raise ValueError(f"{kind}({n}) has rank 0; need n >= 2")
        rd = simply_connected(f"A{n - 1}", **kw) if kind == "SL" else adjoint(f"A{n - 1}", **kw)
        object.__setattr__(rd, "name", f"{kind}({n})")
        return rd
    if kind == "SimplyConnected":
        return simply_connected(str(arg), **kw)
    return adjoint(str(arg), **kw)


def from_json(obj: dict, **kw) -> RootDatum:
    if "named" in obj:
        return build_named(obj["named"], **kw)
    try:
        return RootDatum(
            int(obj["rank"]),
            tuple(tuple(r) for r in obj["simple_roots"]),
            tuple(tuple(c) for c in obj["simple_coroots"]),
            name=obj.get("name", "custom"),
            **kw,
        )
    except KeyError as exc:
        raise ValueError(f"root datum JSON missing key {exc}") from None


# --------------------------------------------------------------------------
# Operations
# --------------------------------------------------------------------------


def weyl_elements(rd: RootDatum, cap: Optional[int] = None) -> Tuple[WeylElement, ...]:
    """All of W ordered by (length, lexicographic reduced word).

    Breadth-first search over right multiplication by simple reflections;
    each element keeps its lexicographically smallest reduced word.
    """
    cap = rd.weyl_cap if cap is None else cap
    if rd.semisimple_rank:
        expected = rd.weyl_order()
        if expected > cap:
            raise CapExceededError(f"|W| = {expected} exceeds the cap {cap}")
    e = WeylElement(linalg.identity(rd.rank), ())
    seen = {e.matrix}
    out = [e]
    layer = [e]
    gens = rd.simple_reflections
    while layer:
        nxt = []
        for u in layer:
            for s in gens:
                m = linalg.matmul(u.matrix, s.matrix)
                if m not in seen:
                    seen.add(m)
                    nxt.append(WeylElement(m, u.word + s.word))
                    if len(seen) > cap:
                        raise CapExceededError(f"Weyl group exceeds the cap {cap}")
        out.extend(nxt)
        layer = nxt
    return tuple(out)


def positive_roots(rd: RootDatum) -> Tuple[IntVec, ...]:
    return rd.positive_roots


def positive_coroots(rd: RootDatum) -> Tuple[IntVec, ...]:
    return rd.positive_coroots


def coefficients(rd: RootDatum, v: Sequence, side: str = "coweight") -> Optional[Tuple[Fraction, ...]]:
    """Coefficients of ``v`` in simple coroots (or simple roots); ``None`` if
    ``v`` is outside their rational span."""
    basis = rd.simple_coroots if side == "coweight" else rd.simple_roots
    if side not in ("weight", "coweight"):
        raise ValueError(f"side must be 'weight' or 'coweight', got {side!r}")
    if len(v) != rd.rank:
        raise ValueError(f"dimension mismatch: {len(v)} vs {rd.rank}")
    return linalg.coefficients_in_basis(basis, v)


def dominance_leq(rd: RootDatum, a: Sequence, b: Sequence, side: str = "coweight") -> bool:
    """``a <= b``: ``b - a`` is a nonnegative rational combination of simple
    coroots (``side="coweight"``) or simple roots (``side="weight"``)."""
    c = coefficients(rd, linalg.sub(b, a), side)
    return c is not None and all(x >= 0 for x in c)


def fundamental_coweights(rd: RootDatum) -> Tuple[Tuple, ...]:
    """The basis of the rational coroot span dual to the simple roots."""
    m = rd.semisimple_rank
    if m == 0:
        return ()
    inv = linalg.inverse(rd.cartan)
    return tuple(canon_vec(linalg.lincomb(inv[i], rd.simple_coroots, rd.rank)) for i in range(m))


def fundamental_weights(rd: RootDatum) -> Tuple[Tuple, ...]:
    """The basis of the rational root span dual to the simple coroots."""
    m = rd.semisimple_rank
    if m == 0:
        return ()
    inv_t = linalg.inverse(linalg.transpose(rd.cartan))
    return tuple(canon_vec(linalg.lincomb(inv_t[i], rd.simple_roots, rd.rank)) for i in range(m))


def finite_types_up_to_rank(max_rank: int, reducible: bool = True) -> List[str]:
    """Cartan type strings (``"A2"``, ``"A1xB2"``, ...) of total rank <= max_rank."""
    irreducible = []
    for r in range(1, max_rank + 1):
        irreducible.append(("A", r))
        if r >= 2:
            irreducible.append(("B", r))
        if r >= 3:
            irreducible.append(("C", r))
        if r >= 4:
            irreducible.append(("D", r))
    if max_rank >= 2:
        irreducible.append(("G", 2))
    if max_rank >= 4:
        irreducible.append(("F", 4))
    for r in (6, 7, 8):
        if max_rank >= r:
            irreducible.append(("E", r))
    irreducible.sort(key=lambda t: (t[1], t[0]))
    if not reducible:
        return [f"{l}{r}" for l, r in irreducible]

    out = []

    def extend(prefix, start, left):
        if prefix:
            out.append("x".join(f"{l}{r}" for l, r in prefix))
        for k in range(start, len(irreducible)):
            l, r = irreducible[k]
            if r <= left:
                extend(prefix + [(l, r)], k, left - r)

    extend([], 0, max_rank)
    return sorted(out, key=lambda s: (sum(r for _, r in parse_cartan_type(s)), s))
