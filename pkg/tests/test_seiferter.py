import pytest
from hypothesis import given, strategies as st

from seifnet.classify import resolve_name
from seifnet.homology import Slope
from seifnet.knots import (PRETZEL_333, TREFOIL, BasicKind, StatusKind, SurgeryVertex,
                           TorusKnot, Twisted)
from seifnet.seiferter import (C_MU, S_2, S_M3, ExcludedPairError, LinkStatus,
                               annular_pairs, applicable_role, basic_annular_candidates,
                               basic_annular_pairs_found, c_from_double_move, cm_family,
                               cm_link_status, has_hyperbolic_seiferter, index_after_twist,
                               indices_after_twist, irrelevant_pairs, lens_case_pairs,
                               m_move_chain_shift, origin, pair_lk, pair_lk_table,
                               same_lk_filter, seiferter_status, twist)
from seifnet.torus import moser_indices

SEIFERTERS = [C_MU, S_M3, S_2, cm_family(-6), cm_family(-1), cm_family(3)]


def test_twist_slopes():
    v = SurgeryVertex(TREFOIL, -6)
    assert twist(v, cm_family(-6), 1).slope == Slope(19)
    w = SurgeryVertex(TREFOIL, -1)
    for n in range(-5, 6):
        assert twist(w, cm_family(-1), n).slope == Slope(-1)
    assert twist(v, S_M3, 0) == v


def test_twist_needs_integral_slope():
    with pytest.raises(ValueError):
        twist(SurgeryVertex(TREFOIL, Slope(1, 2)), C_MU, 1)


@given(st.sampled_from(SEIFERTERS), st.integers(-30, 30), st.integers(-20, 20),
       st.integers(-20, 20))
def test_twist_group_action(s, m, a, b):
    v = SurgeryVertex(TREFOIL, m)
    assert twist(twist(v, s, a), s, b) == twist(v, s, a + b)
    assert twist(twist(v, s, a), s, -a) == v


@given(st.sampled_from(SEIFERTERS), st.integers(-30, 30), st.integers(-20, 20))
def test_origin_inverts_twist(s, m, n):
    v = SurgeryVertex(TREFOIL, m)
    w = twist(v, s, n)
    if not s.preserves_knot:
        assert origin(w, s) == v


def test_applicable_role():
    assert applicable_role(SurgeryVertex(TREFOIL, 4), C_MU) is not None
    c6 = cm_family(-6)
    for m in (-6, -7, -8):
        assert applicable_role(SurgeryVertex(TREFOIL, m), c6) is not None
    assert applicable_role(SurgeryVertex(TREFOIL, -5), c6) is None
    assert applicable_role(twist(SurgeryVertex(TREFOIL, -6), c6, 2), c6) is not None
    assert applicable_role(SurgeryVertex(TREFOIL, -2), c_from_double_move()) is None


def test_cm_family_basics():
    assert cm_family(-6).lk_with_knot == 5
    assert cm_family(-1).lk_with_knot == 0
    assert cm_family(-3).status.basic is BasicKind.S_P


def test_seiferter_status_table():
    assert seiferter_status(1).kind is StatusKind.HYPERBOLIC
    assert seiferter_status(-5).kind is StatusKind.CABLE
    assert seiferter_status(-5).cable_slope == Slope(-1, 2)
    assert seiferter_status(-2).basic is BasicKind.C_MU
    assert seiferter_status(-4).basic is BasicKind.S_Q
    for m in list(range(-40, -5)) + list(range(-1, 40)):
        assert seiferter_status(m).kind is StatusKind.HYPERBOLIC


def test_cm_link_status_consistent_with_table():
    for m in range(-40, 40):
        st_ = seiferter_status(m).kind
        link = cm_link_status(m)
        if st_ is StatusKind.HYPERBOLIC:
            assert link is LinkStatus.HYPERBOLIC
        else:
            assert link is not LinkStatus.HYPERBOLIC


def test_has_hyperbolic_seiferter():
    assert has_hyperbolic_seiferter(-5) is True
    assert has_hyperbolic_seiferter(-4) is None
    assert has_hyperbolic_seiferter(-3) is True
    assert all(has_hyperbolic_seiferter(m) for m in range(-30, 30) if m != -4)


def test_index_after_twist_examples():
    # c_2 role of c^-6 sits at ambient slope -7 with shift -3
    assert index_after_twist(cm_family(-6), 1, -7) == 8
    c = c_from_double_move()
    assert index_after_twist(c, -1) == 7
    assert index_after_twist(c, 0) == 3
    assert index_after_twist(c, 1) == 13
    assert resolve_name(twist(SurgeryVertex(TREFOIL, -1), c, -1)) == PRETZEL_333


@given(st.integers(-60, 60))
def test_zero_twist_keeps_indices(m):
    s = cm_family(m)
    for amb in (m, m - 1, m - 2):
        assert indices_after_twist(s, 0, amb) == moser_indices(TREFOIL, Slope(amb))


def test_m_move_chain():
    assert m_move_chain_shift([(2, -1), (1, -1)]) == 4
    assert m_move_chain_shift([]) == 0


def test_pair_lk_table():
    t = pair_lk_table(-4)
    assert pair_lk(-4, "c_1", "s_2") == 3
    assert pair_lk(-4, "c_2", "c_1") == -1
    assert pair_lk(-4, "c_3", "c_mu") == 1
    assert t[frozenset(("T", "c_2"))] == -2
    for a, b in (("c_3", "s_2"), ("c_2", "s_-3"), ("c_1", "c_mu")):
        with pytest.raises(ExcludedPairError):
            pair_lk(0, a, b)


def test_same_lk_filter():
    assert {p.label() for p in same_lk_filter(-5)} == {"{s_-3, c_3^-5}", "{s_2, c_2^-5}"}
    assert same_lk_filter(0) == []
    assert {p.label() for p in same_lk_filter(1)} == {"{s_-3, c_1^1}", "{s_2, c_2^1}"}


def test_irrelevant_only_for_lens_surgeries():
    assert len(irrelevant_pairs(-5)) == 2
    for m in (-4, -3, -1, 1):
        assert irrelevant_pairs(m) == []
    assert len(annular_pairs(-5)) == 7
    assert len(annular_pairs(3)) == 9


def test_basic_annular_candidates():
    assert len(basic_annular_candidates(-4)) == 3
    assert [p.label() for p in basic_annular_candidates(-6)] == ["{s_-3, c_3^-6}"]
    assert basic_annular_candidates(5) == []
    [p] = basic_annular_candidates(0)
    assert p.label() == "{s_-3, c_3^0}" and p.rejected


def test_lens_cases():
    assert lens_case_pairs(3) == []
    v5 = lens_case_pairs(-5, range(-3, 3))
    assert v5[0].annular and not v5[0].basic
    assert not lens_case_pairs(-7, range(-3, 3))[0].annular
    found = basic_annular_pairs_found(-5)
    assert "{s_-3, c_2^-5} (p=-1)" in found and "{s_2, c_3^-5} (p=-2)" in found
    assert not any(v.basic for v in lens_case_pairs(-7))
