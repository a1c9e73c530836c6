from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from endolift.charsets import CharSet, classify
from endolift.errors import DomainError, PreconditionError
from endolift.exactnum import HalfInt
from endolift.weights import (
    DominantWeight,
    GroupShape,
    arch_param,
    charset_of,
    delta_gspin,
    describing_set,
    embed_sp,
    eta_weight,
    gspin_iota,
    gspin_iota_via_lattice,
    is_eta_invariant,
    langlands_target,
    rho_compat_check,
    sigma_star,
    sigma_status,
    weight_of_charset,
)

H = Fraction(1, 2)


def test_validation():
    with pytest.raises(DomainError):
        DominantWeight.gl([0, 1])
    with pytest.raises(DomainError):
        DominantWeight.pgl([1, 0])
    with pytest.raises(DomainError):
        DominantWeight.sp([1, -1])
    with pytest.raises(DomainError):
        DominantWeight(GroupShape("GLxGL1", 2), (1, 0))
    with pytest.raises(DomainError):
        DominantWeight(GroupShape("GL", 2), (1, 0), 3)
    with pytest.raises(DomainError):
        GroupShape("SL", 2)


def test_rho_and_shift():
    chi = DominantWeight.pgl([0, 0, 0])
    assert chi.rho == (HalfInt(2), HalfInt(0), HalfInt(-2))
    assert DominantWeight.gl([1, 0]).shifted == (HalfInt(3), HalfInt(-1))


def test_eta_examples():
    chi = DominantWeight.pgl([1, 0, -1])
    assert eta_weight(chi) == chi and is_eta_invariant(chi)
    chi = DominantWeight.gl_gl1([2, 1], 3)
    assert eta_weight(chi) == chi and is_eta_invariant(chi)
    chi = DominantWeight.gl([2, 0])
    assert eta_weight(chi).coords == (0, -2)
    assert not is_eta_invariant(chi)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7), st.integers(-4, 4))
def test_eta_is_involution(values, a0):
    coords = sorted(values, reverse=True)
    for chi in (DominantWeight.gl(coords), DominantWeight.gl_gl1(coords, a0)):
        assert eta_weight(eta_weight(chi)) == chi


def test_charset_of_examples():
    assert charset_of(DominantWeight.pgl([0, 0, 0])) == (CharSet.of([-1, 0, 1]), None)
    for k in range(4):
        for g in range(1, 4):
            s, _ = charset_of(DominantWeight.sp([k] * g))
            expected = [0] + [x for i in range(1, g + 1) for x in (k + i, -(k + i))]
            assert s == CharSet.of(expected)


def test_charset_of_gl_gl1():
    # χ+ρ = (b1, b2; b0) with b1 + b2 = b0 gives {±(b1 - b0/2)}
    for k in range(5):
        chi = DominantWeight.gl_gl1([k + 1, 0], k + 1)
        b1 = Fraction(k + 1) + H
        s, w = charset_of(chi)
        assert w == k + 1
        assert s == CharSet.of([b1 - Fraction(k + 1, 2), -(b1 - Fraction(k + 1, 2))])


def test_weight_of_charset_examples():
    pgl3 = GroupShape("PGL", 3)
    assert weight_of_charset(CharSet.of([-1, 0, 1]), pgl3).coords == (0, 0, 0)
    assert weight_of_charset(CharSet.of([-2, -1, 0, 1, 2]), GroupShape("PGL", 5)).coords == (0,) * 5
    assert weight_of_charset(CharSet.of([-2, 0, 2]), pgl3).coords == (1, 0, -1)
    with pytest.raises(PreconditionError):
        weight_of_charset(CharSet.of([-1, 1]), pgl3)
    with pytest.raises(PreconditionError):
        weight_of_charset(CharSet.of([-1, 1]), GroupShape("GLxGL1", 2), 2)


@given(st.lists(st.integers(0, 5), min_size=0, max_size=4))
def test_pgl_dictionary_round_trip(values):
    chi = embed_sp(DominantWeight.sp(sorted(values, reverse=True)))
    s, _ = charset_of(chi)
    assert classify(s).kind == "C"
    assert weight_of_charset(s, chi.shape) == chi


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4), st.integers(-3, 3))
def test_gl_gl1_dictionary_round_trip(values, w):
    top = sorted(values, reverse=True)
    coords = top + [w - x for x in reversed(top)]
    assume(coords == sorted(coords, reverse=True))
    chi = DominantWeight.gl_gl1(coords, w)
    s, weight = charset_of(chi)
    assert weight == w
    assert classify(s).kind == ("B" if w % 2 == 0 else "D")
    assert weight_of_charset(s, chi.shape, w) == chi


def test_describing_set_descending():
    entries = describing_set(DominantWeight.pgl([2, 0, -2]))
    assert list(entries) == sorted(entries, reverse=True)


def test_sigma_status_examples():
    assert sigma_status(DominantWeight.gso(4, [3, 2])) == "fixed"
    assert sigma_status(DominantWeight.gso(1, [1])) == "positive"
    assert sigma_status(DominantWeight.gso(2, [0])) == "flipped"
    chi = DominantWeight.gso(2, [0])
    assert sigma_star(sigma_star(chi)) == chi


def test_gspin_iota_examples():
    assert gspin_iota(DominantWeight.gl_gl1([1, 0], 1)) == (HalfInt(2), HalfInt(2))
    assert delta_gspin(3) == (0, 2, 1, 0)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4), st.integers(-3, 3))
def test_gspin_iota_two_routes_agree(values, half):
    m0 = 2 * half + 1
    top = sorted(values, reverse=True)
    coords = top + [m0 - x for x in reversed(top)]
    assume(coords == sorted(coords, reverse=True))
    chi = DominantWeight.gl_gl1(coords, m0)
    iota = gspin_iota(chi)
    assert iota == gspin_iota_via_lattice(chi)
    assert all(x.is_integral for x in iota)


def test_arch_param():
    p = arch_param(DominantWeight.pgl([0, 0, 0]))
    assert p.entries == (HalfInt(2), HalfInt(0), HalfInt(-2))
    assert p.weight_b0 == HalfInt(0) and p.epsilon == 1
    p = arch_param(DominantWeight.gl_gl1([1, 1], 2))
    assert p.epsilon == -1
    p = arch_param(DominantWeight.gl_gl1([1, 0], 1))
    assert p.epsilon == 1
    with pytest.raises(PreconditionError):
        arch_param(DominantWeight.gl([2, 0]))


def test_langlands_target():
    assert langlands_target(CharSet.of([-H, H])) == "GSp"
    assert langlands_target(CharSet.of([-1, 1])) == "GSO"
    assert langlands_target(CharSet.of([-3 * H, -H, H, 3 * H])) == "GSp"
    with pytest.raises(PreconditionError):
        langlands_target(CharSet.of([0]))


@pytest.mark.parametrize("g", range(1, 7))
def test_rho_compat(g):
    assert rho_compat_check(g)
