import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hnstrata import lattice as L
from hnstrata import rootdata as R
from hnstrata import strata as S
from hnstrata.slope import phi_G, slope_geq


def keys(strata):
    return [(s.I_M, s.degree.free) for s in strata]


def test_make_stratum_examples():
    g3 = R.gl(3)
    s = S.make_stratum(g3, (1,), (3, 0, 0))
    assert s.slope.coords == (3, 0, 0) and s.degree.free == (3, 0)
    assert s.lambda_G.free == (3,)
    S.make_stratum(g3, (), (2, 1, 0))
    with pytest.raises(ValueError, match="alpha_0> = -1"):
        S.make_stratum(R.gl(2), (), (0, 1))


def test_destabilizing_examples():
    g3, g2 = R.gl(3), R.gl(2)
    assert S.is_destabilizing(g3, (1,), (3, 0), 3)
    assert not S.is_destabilizing(g2, (), (0, 0), 0)
    assert not S.is_destabilizing(g2, (), (0, 1), 1)
    with pytest.raises(ValueError):
        S.is_destabilizing(g2, (), (0, 1), 2)


def test_comparison_examples():
    g2, g3 = R.gl(2), R.gl(3)
    c = S.make_stratum(g2, (), (2, -2))
    r = S.comparison_geq(c, (), (1, -1))
    assert r.geq and not r.equal
    c3 = S.make_stratum(g3, (), (2, 1, 0))
    assert not S.comparison_geq(c3, (1,), (3, 0)).geq
    r = S.comparison_geq(c3, (), (2, 1, 0))
    assert r.geq and r.equal and r.nested
    with pytest.raises(ValueError):
        S.comparison_geq(c3, (), (2, 1, 1))


def test_enumerate_examples():
    g2 = R.gl(2)
    out = S.enumerate_strata(g2, 1, 3)
    # c = <phi, alpha> = 2a - 1 must lie in (0, 3]: a = 1, 2; (3,-2) has c = 5
    assert keys(out) == [((), (1, 0)), ((), (2, -1)), ((0,), (1,))]
    assert keys(S.enumerate_strata(g2, 1, 5))[2] == ((), (3, -2))
    assert keys(S.enumerate_strata(g2, 0, 0)) == [((0,), (0,))]
    g3 = R.gl(3)
    found = keys(S.enumerate_strata(g3, 3, 3))
    assert ((), (2, 1, 0)) in found and ((1,), (3, 0)) in found


def test_enumerate_matches_bruteforce():
    """Every regular class with coefficients under the cap, searched in a big box."""
    for rd in [R.gl(2), R.gl(3), R.simply_connected("B2"), R.adjoint("G2"), R.build_named("PGL:3")]:
        full = L.quotient_lattice(rd, rd.index_set)
        for v in [(0,) * rd.rank, (1,) + (0,) * (rd.rank - 1)]:
            lg = full.project(v)
            for bound in (0, 1, F(5, 2)):
                want = set()
                for k in range(len(rd.index_set) + 1):
                    for sub in itertools.combinations(rd.index_set, k):
                        for w in itertools.product(range(-8, 9), repeat=rd.rank):
                            if full.project(w) != lg:
                                continue
                            try:
                                s = S.make_stratum(rd, sub, w)
                            except ValueError:
                                continue
                            from hnstrata.slope import omega_coefficients

                            if all(c <= bound for c in omega_coefficients(s.slope)):
                                want.add(s.key())
                got = [s.key() for s in S.enumerate_strata(rd, lg, bound)]
                assert len(got) == len(set(got))
                assert set(got) == want, (rd.name, v, bound)


def test_enumeration_order_is_deterministic():
    g3 = R.gl(3)
    a = [s.to_json() for s in S.enumerate_strata(g3, 0, 3)]
    b = [s.to_json() for s in S.enumerate_strata(g3, 0, 3)]
    assert a == b
    codims = [len(s["I_M"]) for s in a]
    assert codims == sorted(codims)


def test_closure_examples():
    g2, g3 = R.gl(2), R.gl(3)
    a = S.make_stratum(g2, (), (1, 0))
    b = S.make_stratum(g2, (), (2, -1))
    assert S.closure_same_parabolic_contains(a, b)
    assert not S.closure_same_parabolic_contains(b, a)
    assert S.closure_same_parabolic_contains(a, a)
    x = S.make_stratum(g3, (), (2, 1, 0))
    y = S.make_stratum(g3, (1,), (3, 0))
    G = S.make_stratum(g3, (0, 1), (3,))
    assert S.closure_meets_necessary(x, y)
    assert not S.closure_meets_necessary(x, G)
    assert S.closure_meets_necessary(x, x)
    with pytest.raises(ValueError):
        S.closure_same_parabolic_contains(x, y)


def test_semistable_stratum_always_present():
    for rd in [R.gl(3), R.simply_connected("B2"), R.build_named("PGL:2")]:
        full = L.quotient_lattice(rd, rd.index_set)
        for c in full.generators():
            out = S.enumerate_strata(rd, c, 0)
            assert [s.I_M for s in out] == [rd.index_set]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["GL:2", "GL:3", "SC:B2", "SC:G2", "PGL:3"]), st.integers(0, 3), st.data())
def test_enumeration_monotone_and_valid(desc, bound, data):
    rd = R.build_named(desc)
    full = L.quotient_lattice(rd, rd.index_set)
    v = data.draw(st.lists(st.integers(-2, 2), min_size=rd.rank, max_size=rd.rank))
    lg = full.project(v)
    small = S.enumerate_strata(rd, lg, bound)
    big = S.enumerate_strata(rd, lg, bound + 1)
    assert {s.key() for s in small} <= {s.key() for s in big}
    pg = phi_G(rd, lg)
    for s in small:
        assert s.lambda_G == lg
        # every stratum is at least as unstable as the semistable slope
        assert slope_geq(s.slope, pg)


def test_comparison_nesting_on_equal_slopes():
    g3 = R.gl(3)
    c = S.make_stratum(g3, (1,), (3, 0))
    # the complete flag (3,0,0) has the same slope but a smaller Levi
    r = S.comparison_geq(c, (), (3, 0, 0))
    assert r.equal and r.nested


def test_stratum_json_round_trip():
    g3 = R.gl(3)
    for s in S.enumerate_strata(g3, 1, 2):
        assert S.stratum_from_json(g3, s.to_json()) == s
