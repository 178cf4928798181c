"""Smoke tests for the hipbreak extension module."""

import pytest

import hipbreak as hb


def test_field_arithmetic():
    f4 = hb.make_field(2, 2, modulus=[1, 1, 1])
    t = f4.element([0, 1])
    assert str(t * t) == "1:1"
    assert t.inv() == f4.element([1, 1])
    f5 = hb.make_field(5)
    assert (f5.from_int(2) * f5.from_int(3)).is_one()
    with pytest.raises(ValueError):
        hb.make_field(4)


def test_poly_factor():
    f2 = hb.make_field(2)
    a = hb.Poly(f2, [1, 1, 0, 1])
    b = hb.Poly(f2, [1, 0, 1, 1])
    assert hb.is_irreducible(a)
    prod = a * b
    assert not hb.is_irreducible(prod)
    p, q, scale = hb.factor_two_irreducibles(prod, 3)
    assert (p, q) == (a, b)
    assert scale.is_one()


def test_protocol_roundtrip():
    params = hb.validate_params(3, 1, 12, 5)
    rng = hb.Rng(7)
    kp = hb.keygen(params, rng)
    pB = hb.random_irreducible(5, params.field, rng)
    qB = hb.random_irreducible(5, params.field, rng)
    ct = hb.encrypt(kp.pub, pB, qB)
    p, q, scale = hb.decrypt(kp.priv, ct)
    assert {str(p), str(q)} == {str(pB), str(qB)}
    assert scale.is_one()


def test_attacks_recover_private_matrix():
    params = hb.validate_params(2, 1, 16, 7)
    rng = hb.Rng(99)
    kp = hb.keygen(params, rng)
    readoff = hb.attack_readoff(kp.pub)
    linear = hb.attack_linear(kp.pub)
    assert readoff.T == kp.priv.T
    assert linear.T == kp.priv.T
    assert readoff.consistent()
    assert hb.verify_break(kp.pub, readoff.T).ok()


def test_attack_decrypts_without_private_key():
    params = hb.validate_params(5, 1, 8, 3)
    rng = hb.Rng(11)
    pub = hb.keygen(params, rng).pub  # discard the private half
    pB = hb.random_irreducible(3, params.field, rng)
    qB = hb.random_irreducible(3, params.field, rng)
    ct = hb.encrypt(pub, pB, qB)
    rec = hb.attack_readoff(pub)
    p, q, _ = hb.decrypt(hb.PrivateKey(pub.params, rec.T), ct)
    assert {str(p), str(q)} == {str(pB), str(qB)}


def test_demo_fixture_row14():
    kp = hb.key_pair_from_matrix(hb.demo.params(), hb.demo.matrix())
    rec = hb.attack_readoff(kp.pub)
    row = [int(str(rec.T.at(13, j))) for j in range(15)]
    assert row == hb.demo.golden_row14()
    assert rec.T == kp.priv.T


def test_key_file_roundtrip():
    params = hb.validate_params(2, 2, 8, 3)
    kp = hb.keygen(params, hb.Rng(4))
    pub_text = hb.write_public(kp.pub)
    assert pub_text.startswith("HIP p=2 m=2 n=8 k=3\n")
    pk = hb.read_public(pub_text)
    assert pk.forms == kp.pub.forms
    with pytest.raises(ValueError):
        hb.read_public(pub_text[: len(pub_text) // 2])
