import itertools

import pytest

from moufang.decomp import decompose, is_semilattice, natural_order, principal_ideal
from moufang.errors import InvalidCharacteristic, ZeroWeight
from moufang.generators import (
    VectorEncoding,
    chain_semilattice,
    cyclic_group,
    jordan_left_zero,
    radical,
    weight,
    witness_t,
    zn_multiplicative,
)
from moufang.magma import (
    IdentityKind,
    check_identity,
    corollary4_check,
    lemma3_check,
    lemma5_check,
    power,
)

from oracles import basis, jordan_product, jordan_product_mod, mutual_divisibility_classes

K = IdentityKind


@pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (5, 1), (5, 2), (3, 3), (7, 1)])
def test_jordan_table_matches_algebra_oracle(p, m):
    M, enc = jordan_left_zero(p, m)
    assert M.order == p ** m
    for x, y in itertools.product(M.elements, repeat=2):
        expected = jordan_product_mod(enc.to_vector(x), enc.to_vector(y), p)
        assert M(x, y) == enc.from_vector(expected)


def test_jordan_examples():
    M, _ = jordan_left_zero(3, 1)
    assert M.table == ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    assert M == zn_multiplicative(3)
    M, enc = jordan_left_zero(3, 2)
    assert M(enc.from_vector((1, 2)), enc.from_vector((1, 0))) == enc.from_vector((2, 1))
    with pytest.raises(InvalidCharacteristic):
        jordan_left_zero(2, 1)
    with pytest.raises(InvalidCharacteristic):
        jordan_left_zero(9, 1)


def test_encoding_round_trip():
    enc = VectorEncoding(5, 3)
    assert [enc.from_vector(enc.to_vector(x)) for x in range(125)] == list(range(125))
    assert enc.to_vector(7) == (2, 1, 0)


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (7, 1)])
def test_prime_field_case_is_commutative_moufang(p, m):
    M, _ = jordan_left_zero(p, m)
    for kind in (K.COMMUTATIVE, K.CENTRAL_MOUFANG, K.LEFT_MOUFANG, K.RIGHT_MOUFANG):
        assert check_identity(M, kind).holds


def test_moufang_fails_over_the_rationals():
    # x = y = e1, z = e2 in the symmetrized algebra over Q
    e1, e2 = basis(2, 0), basis(2, 1)
    x, y, z = e1, e1, e2
    lhs = jordan_product(jordan_product(x, y), jordan_product(z, x))
    rhs = jordan_product(jordan_product(x, jordan_product(y, z)), x)
    assert [str(c) for c in lhs] == ["3/4", "1/4"]
    assert [str(c) for c in rhs] == ["7/8", "1/8"]


@pytest.mark.parametrize("p,m,cex", [(3, 2, (1, 1, 3)), (5, 2, (1, 1, 5))])
def test_jordan_m2_is_not_central_moufang(p, m, cex):
    M, enc = jordan_left_zero(p, m)
    assert check_identity(M, K.COMMUTATIVE).holds
    r = check_identity(M, K.CENTRAL_MOUFANG)
    assert not r.holds and r.counterexample == cex
    assert enc.to_vector(cex[0]) == (1,) + (0,) * (m - 1)
    assert not check_identity(M, K.LEFT_MOUFANG).holds
    assert not check_identity(M, K.RIGHT_MOUFANG).holds


def test_jordan_translation_identities_fail(jordan32):
    M, enc = jordan32
    a, b = enc.from_vector((1, 0)), enc.from_vector((0, 1))
    # (ab)^2 = ab = (e1+e2)/2 but a(a b^2) = 3/4 e1 + 1/4 e2
    e1, e2 = basis(2, 0), basis(2, 1)
    ab = jordan_product(e1, e2)
    assert jordan_product(ab, ab) == ab
    assert jordan_product(e1, jordan_product(e1, jordan_product(e2, e2))) != ab
    assert lemma3_check(M, a, b, 0)
    assert not lemma3_check(M, a, b, 3)
    assert not corollary4_check(M, [a, b], enc.from_vector((1, 1)), 2)
    assert not lemma5_check(M, a, enc.from_vector((2, 2)), 3)


def test_weight_examples():
    enc = VectorEncoding(3, 2)
    assert weight(enc, enc.from_vector((0, 0))) == 0
    assert weight(enc, enc.from_vector((1, 2))) == 0
    assert weight(enc, enc.from_vector((2, 2))) == 1


def test_radical_examples():
    assert radical(VectorEncoding(3, 1)) == {0}
    enc = VectorEncoding(3, 2)
    assert radical(enc) == {enc.from_vector(v) for v in ((0, 0), (1, 2), (2, 1))}
    assert len(radical(VectorEncoding(5, 2))) == 5
    assert len(radical(VectorEncoding(3, 3))) == 9


def test_radical_is_an_ideal(jordan32):
    M, enc = jordan32
    rad = radical(enc)
    assert all(M(x, r) in rad for x in M.elements for r in rad)


def test_witness_examples():
    enc = VectorEncoding(3, 1)
    M, _ = jordan_left_zero(3, 1)
    assert witness_t(enc, 2, 1) == 2 and M(2, 2) == 1
    assert witness_t(enc, 1, 1) == 1
    M, enc = jordan_left_zero(3, 2)
    x, y = enc.from_vector((1, 0)), enc.from_vector((0, 1))
    t = witness_t(enc, x, y)
    # (1/1)(2*1*(0,1) - 1*(1,0)) = (-1, 2) = (2, 2)
    assert enc.to_vector(t) == (2, 2)
    assert M(x, t) == y
    with pytest.raises(ZeroWeight):
        witness_t(enc, 0, y)


def test_principal_ideal_of_radical_element(jordan32):
    M, enc = jordan32
    a = enc.from_vector((1, 2))
    assert principal_ideal(M, a).members == {enc.from_vector((k, 2 * k)) for k in range(3)}


def test_jordan_decomposition_structure():
    for p, sizes in ((3, (3, 6)), (5, (5, 20)), (3, None)):
        m = 2 if sizes else 3
        M, enc = jordan_left_zero(p, m)
        d = decompose(M, require_hypotheses=False)
        assert d.quotient.table == ((0, 0), (0, 1))
        assert set(d.components[0].members) == radical(enc)
        assert len(d.components[0].members) == p ** (m - 1)
        assert len(d.components[1].members) == p ** m - p ** (m - 1)
        flags = d.certified
        assert flags.input_commutative and not flags.input_moufang
        assert flags.structural()


def test_chain_and_zn():
    assert chain_semilattice(1).table == ((0,),)
    assert chain_semilattice(2).table == ((0, 0), (0, 1))
    c3 = chain_semilattice(3)
    assert is_semilattice(c3)
    assert natural_order(c3).covers() == [(0, 1), (1, 2)]
    assert zn_multiplicative(1).table == ((0,),)
    assert cyclic_group(3).table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))


@pytest.mark.parametrize("k", [1, 4, 6, 8, 9, 12])
def test_zn_decomposition_matches_divisibility_oracle(k):
    M = zn_multiplicative(k)
    d = decompose(M)
    assert d.certified.all()
    assert sorted(list(c.members) for c in d.components) == mutual_divisibility_classes(k)


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (3, 3)])
def test_jordan_closed_forms(p, m):
    M, enc = jordan_left_zero(p, m)
    for x, y in itertools.product(M.elements, repeat=2):
        assert weight(enc, M(x, y)) == weight(enc, x) * weight(enc, y) % p
    for x in M.elements:
        wx, v = weight(enc, x), enc.to_vector(x)
        for n in range(1, 11):
            assert power(M, x, n) == enc.from_vector([pow(wx, n - 1, p) * c for c in v])
