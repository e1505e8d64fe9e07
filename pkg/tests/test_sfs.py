from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seifnet.sfs import (IncomparableLensError, Kind, LinkStatus, MalformedTripleError,
                         Montesinos, NotThreeTanglesError, OrbifoldTriple, SfsClass,
                         TOROIDAL_MONTESINOS, TwoBridge, classify_triple,
                         continued_fraction, double_branched_cover, euler_number,
                         from_continued_fraction, lens_equivalent, montesinos_equivalent,
                         montesinos_status, two_bridge_is_torus_link)

F = Fraction


def test_triple_is_unordered():
    assert OrbifoldTriple.of(5, 2, 3) == OrbifoldTriple.of(2, 3, 5)
    assert str(OrbifoldTriple.of(3, 2, 5)) == "S2(2,3,5)"


def test_negative_index_rejected():
    with pytest.raises(MalformedTripleError):
        OrbifoldTriple.of(2, -3, 5)


@pytest.mark.parametrize("triple,kind", [
    ((2, 3, 5), Kind.SMALL_SFS),
    ((2, 3, 0), Kind.CONN_SUM_LENS),
    ((2, 3, 1), Kind.LENS),
    ((1, 1, 7), Kind.SPHERE),
    ((0, 1, 7), Kind.LENS),
    ((0, 1, 1), Kind.SPHERE),
    ((0, 0, 4), Kind.LENS),
])
def test_classify_triple(triple, kind):
    assert classify_triple(OrbifoldTriple(triple)).kind is kind


def test_small_sfs_and_lens_shape():
    assert classify_triple((2, 3, 5)).triple == OrbifoldTriple.of(2, 3, 5)
    assert classify_triple((2, 3, 1)).flag == "lens-by-shape"
    assert classify_triple((0, 1, 7)) == SfsClass.lens(7)


def test_too_many_points():
    with pytest.raises(MalformedTripleError):
        classify_triple((2, 3, 5, 7))


@given(st.lists(st.integers(0, 40), min_size=3, max_size=3), st.permutations(range(3)))
def test_classify_permutation_invariant(idx, perm):
    assert classify_triple(idx) == classify_triple([idx[i] for i in perm])


def test_lens_equivalent():
    L = SfsClass.lens
    assert lens_equivalent(L(5, 1), L(5, 1))
    assert lens_equivalent(L(5, 1), L(5, 4), oriented=False)
    assert not lens_equivalent(L(5, 1), L(5, 4), oriented=True)
    assert not lens_equivalent(L(7, 1), L(7, 2), oriented=False)
    assert lens_equivalent(L(7, 2), L(7, 4))
    assert not lens_equivalent(L(7, 1), L(5, 1))


@given(st.integers(2, 60), st.data())
def test_lens_equivalence_brute_force(p, data):
    from math import gcd
    units = [q for q in range(1, p) if gcd(q, p) == 1]
    q1, q2 = data.draw(st.sampled_from(units)), data.draw(st.sampled_from(units))
    oriented = {q1, pow(q1, -1, p)}
    unoriented = oriented | {(-x) % p for x in oriented}
    L = SfsClass.lens
    assert lens_equivalent(L(p, q1), L(p, q2)) == (q2 in oriented)
    assert lens_equivalent(L(p, q1), L(p, q2), oriented=False) == (q2 in unoriented)


def test_lens_without_q():
    with pytest.raises(IncomparableLensError):
        lens_equivalent(SfsClass.lens(5), SfsClass.lens(5, 1))


def test_euler_number():
    assert euler_number([F(1, 2), F(-1, 3), F(1, 6)]) == F(1, 3)
    assert euler_number([F(1, 2), F(-1, 3), F(-1, 6)]) == 0
    assert euler_number([]) == 0


def test_continued_fraction():
    assert continued_fraction(F(10, 3)) == [3, 3]
    assert continued_fraction(F(4, 1)) == [4]
    assert continued_fraction(F(-2, -1)) == [2]


@given(st.fractions(max_denominator=10 ** 6))
def test_continued_fraction_roundtrip(f):
    assert from_continued_fraction(continued_fraction(f)) == f


def test_two_bridge():
    assert two_bridge_is_torus_link(TwoBridge(4, 1))
    assert not two_bridge_is_torus_link(TwoBridge(10, 3))
    assert TwoBridge.from_fraction(-2, -1) == TwoBridge(2, 1)
    assert two_bridge_is_torus_link(TwoBridge(2, 1))
    assert TwoBridge(10, 3).fraction == F(10, 3)
    with pytest.raises(ValueError):
        TwoBridge(0, 1)
    with pytest.raises(ValueError):
        TwoBridge(4, 2)


def test_montesinos_equivalence():
    M = Montesinos.of
    assert montesinos_equivalent(M(F(-1, 2), F(2, 3), F(1, 6)), M(F(1, 2), F(-1, 3), F(1, 6)))
    assert not montesinos_equivalent(M(F(1, 2), F(-1, 3), F(1, 6)), TOROIDAL_MONTESINOS)
    x = M(F(1, 3), F(2, 5), F(-3, 7))
    assert montesinos_equivalent(x, x)
    assert montesinos_equivalent(x, x.mirror(), allow_mirror=True)
    assert not montesinos_equivalent(x, x.mirror())


def test_montesinos_status():
    M = Montesinos.of
    assert montesinos_status(TOROIDAL_MONTESINOS) is LinkStatus.EXCEPTIONAL_TOROIDAL
    assert montesinos_status(TOROIDAL_MONTESINOS.mirror()) is LinkStatus.EXCEPTIONAL_TOROIDAL
    assert montesinos_status(M(F(1, 2), F(-1, 3), F(1, 6))) is LinkStatus.HYPERBOLIC
    assert montesinos_status(M(F(1, 2), F(-1, 3), F(1, 8))) is LinkStatus.HYPERBOLIC
    with pytest.raises(NotThreeTanglesError):
        montesinos_status(M(F(1, 2), F(1, 3)))
    with pytest.raises(NotThreeTanglesError):
        montesinos_status(M(F(1, 2), F(1, 3), F(2)))


def test_double_branched_cover():
    M = Montesinos.of
    assert double_branched_cover(M(F(-1, 2), F(2, 3), F(1, 6))) == (OrbifoldTriple.of(2, 3, 6), F(1, 3))
    assert double_branched_cover(M(F(-1, 2), F(2, 3), F(-1, 2)))[0] == OrbifoldTriple.of(2, 3, 2)
    assert double_branched_cover(M(F(-1, 2), F(2, 3), F(1, 4)))[0] == OrbifoldTriple.of(2, 3, 4)
