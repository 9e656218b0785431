import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hnstrata import lattice as L
from hnstrata import rootdata as R


def positive_class_bruteforce(ql, c, bound=5):
    """Search lifts ``lift(c) + sum t_i coroot_i`` (i in I_M, |t_i| <= bound)."""
    rd = ql.rd
    v = ql.lift(c)
    for t in itertools.product(range(-bound, bound + 1), repeat=len(ql.subset)):
        w = list(v)
        for ti, i in zip(t, ql.subset):
            w = [x + ti * y for x, y in zip(w, rd.simple_coroots[i])]
        a = R.coefficients(rd, w, "coweight")
        if a is not None and all(x.denominator == 1 and x >= 0 for x in a):
            return True
    return False


def test_quotient_examples():
    g3 = R.gl(3)
    ql = L.quotient_lattice(g3, ())
    assert ql.free_rank == 3 and ql.torsion_invariants == ()
    ql = L.quotient_lattice(g3, (0, 1))
    assert ql.free_rank == 1 and ql.torsion_invariants == ()
    assert ql.project((1, 1, 1)).free == (3,)
    pgl2 = R.build_named("PGL:2")
    ql = L.quotient_lattice(pgl2, (0,))
    assert ql.free_rank == 0 and ql.torsion_invariants == (2,)


def test_project_examples():
    g3 = R.gl(3)
    ql = L.quotient_lattice(g3, (1,))
    assert ql.project((3, 1, -1)) == ql.project((3, 0, 0))
    assert ql.project((3, 0, 0)).free == (3, 0)
    assert ql.project((0, 0, 0)) == ql.zero()
    ql = L.quotient_lattice(R.build_named("PGL:2"), (0,))
    assert ql.project((1,)).torsion == (1,)
    assert ql.project((2,)).torsion == (0,)
    assert ql.project((2,)) == ql.zero()


def test_gl_free_coordinates_are_block_degrees():
    ql = L.quotient_lattice(R.gl(4), (0, 2))
    assert ql.project((1, 2, 3, 4)).free == (3, 7)
    ql = L.quotient_lattice(R.gl(3), (1,))
    assert ql.project((5, -2, 4)).free == (5, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pgl_torsion(n):
    rd = R.build_named(f"PGL:{n}")
    ql = L.quotient_lattice(rd, rd.index_set)
    assert ql.torsion_order == n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sl_gl_torsion_free(n):
    for rd in (R.gl(n), R.build_named(f"SL:{n}")):
        for k in range(len(rd.index_set) + 1):
            for sub in itertools.combinations(rd.index_set, k):
                assert L.quotient_lattice(rd, sub).torsion_invariants == ()


def all_lattices():
    data = [R.gl(3), R.build_named("PGL:3"), R.build_named("PGL:4"), R.simply_connected("B2"),
            R.adjoint("B2"), R.adjoint("G2"), R.adjoint("A1xA1"), R.adjoint("D4")]
    for rd in data:
        for k in range(len(rd.index_set) + 1):
            for sub in itertools.combinations(rd.index_set, k):
                yield L.quotient_lattice(rd, sub)


@pytest.mark.parametrize("ql", list(all_lattices()), ids=lambda q: f"{q.rd.name}-{q.subset}")
def test_lift_project_round_trip_and_homomorphism(ql):
    rd = ql.rd
    gens = ql.generators()
    # surjective onto the free + torsion structure: generators span it
    for c in gens:
        assert ql.project(c.lift()) == c
    vs = list(itertools.product(range(-2, 3), repeat=rd.rank))[:40]
    for v in vs:
        for w in vs[:6]:
            assert ql.project(v) + ql.project(w) == ql.project(tuple(a + b for a, b in zip(v, w)))
    # kernel contains the Levi coroots
    for i in ql.subset:
        assert ql.project(rd.simple_coroots[i]) == ql.zero()


def test_positive_class_examples():
    g2 = R.gl(2)
    ql = L.quotient_lattice(g2, ())
    assert L.positive_class(ql, ql.project((1, -1)))
    g3 = R.gl(3)
    ql = L.quotient_lattice(g3, (1,))
    assert L.positive_class(ql, ql.project((1, -1, 0)))
    assert not L.positive_class(ql, ql.project((-1, 1, 0)))
    # outside the coroot span: false, not an error
    assert not L.positive_class(ql, ql.project((1, 0, 0)))


@pytest.mark.parametrize(
    "ql", [q for q in all_lattices() if q.rd.rank <= 3 and len(q.subset) <= 2], ids=lambda q: f"{q.rd.name}-{q.subset}"
)
def test_positive_class_matches_bruteforce(ql):
    rd = ql.rd
    for v in itertools.product(range(-2, 3), repeat=rd.rank):
        c = ql.project(v)
        assert L.positive_class(ql, c) == positive_class_bruteforce(ql, c)
        w = L.positive_witness(ql, c)
        if w is not None:
            assert ql.project(w) == c


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3", "B3", "C4", "F4", "D4"]), st.data())
def test_positive_cone_is_positive(typ, data):
    rd = R.adjoint(typ)
    sub = tuple(i for i in rd.index_set if data.draw(st.booleans()))
    ql = L.quotient_lattice(rd, sub)
    coeffs = data.draw(st.lists(st.integers(0, 4), min_size=rd.semisimple_rank, max_size=rd.semisimple_rank))
    v = [0] * rd.rank
    for a, c in zip(coeffs, rd.simple_coroots):
        v = [x + a * y for x, y in zip(v, c)]
    assert L.positive_class(ql, ql.project(v))


def test_in_weight_sublattice():
    g3 = R.gl(3)
    assert L.in_weight_sublattice(g3, (0,), (1, 1, 0))
    assert not L.in_weight_sublattice(g3, (0,), (1, 0, 0))
    assert L.in_weight_sublattice(g3, (), (7, -3, 2))


def test_class_errors_and_json():
    g3 = R.gl(3)
    a = L.quotient_lattice(g3, (0,))
    b = L.quotient_lattice(g3, (1,))
    with pytest.raises(ValueError):
        a.project((1, 2, 3)) + b.project((1, 2, 3))
    with pytest.raises(ValueError):
        a.project((1, 2))
    with pytest.raises(ValueError):
        a.make((1,))
    c = a.project((4, 1, -2))
    assert L.class_from_json(g3, (0,), c.to_json()) == c
    assert L.coerce_class(g3, (0,), (5, -2)) == c
    assert L.coerce_class(g3, (0,), (4, 1, -2)) == c
    with pytest.raises(ValueError):
        L.coerce_class(g3, (0,), (1, 2, 3, 4))
