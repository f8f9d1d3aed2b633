import itertools
import random

import pytest

from kostant.affinelinkage import (
    UnityParams,
    admissibility,
    affine_linked,
    bottom_alcove_weights_check,
    in_closed_lowest_alcove,
    levi_in_lowest_alcove,
    polo_tilouine_regime,
    restricted_decompose,
)
from kostant.rootdata import build_root_system, parse_type

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
A3 = build_root_system("A", 3)
B2 = build_root_system("B", 2)
G2 = build_root_system("G", 2)


def test_unity_params_validation():
    UnityParams(A1, 3)
    UnityParams(G2, 5)
    with pytest.raises(ValueError):
        UnityParams(A1, 2)
    with pytest.raises(ValueError):
        UnityParams(A1, 1)
    with pytest.raises(ValueError):
        UnityParams(G2, 9)
    ok, reason = admissibility(G2, 9)
    assert not ok and "G2" in reason


def test_affine_linked_a1_examples():
    p = UnityParams(A1, 3)
    assert affine_linked(p, (0,), (4,))
    assert not affine_linked(p, (0,), (1,))
    assert affine_linked(p, (0,), (0,))
    assert affine_linked(p, (5,), (5,), extended=True)


def test_affine_linked_symmetry_and_orbits():
    p = UnityParams(A2, 3)
    rng = random.Random(7)
    pool = [tuple(rng.randrange(-4, 5) for _ in range(2)) for _ in range(12)]
    for lam, mu in itertools.combinations(pool, 2):
        assert affine_linked(p, lam, lam)
        assert affine_linked(p, lam, mu) == affine_linked(p, mu, lam)
        # W_l-linkage implies extended linkage
        if affine_linked(p, lam, mu):
            assert affine_linked(p, lam, mu, extended=True)


def test_affine_linked_sampled_transitivity():
    p = UnityParams(A1, 3)
    weights = [(k,) for k in range(-6, 13)]
    linked_to_zero = [w for w in weights if affine_linked(p, (0,), w)]
    for a in linked_to_zero:
        for b in linked_to_zero:
            assert affine_linked(p, a, b)


def test_restricted_decompose_examples():
    assert restricted_decompose(UnityParams(A1, 5), (7,)) == ((2,), (1,))
    assert restricted_decompose(UnityParams(A2, 3), (4, 3)) == ((1, 0), (1, 1))
    p = UnityParams(B2, 7)
    assert restricted_decompose(p, (3, 5)) == ((3, 5), (0, 0))
    with pytest.raises(ValueError):
        restricted_decompose(p, (-1, 0))


def test_restricted_roundtrip_property():
    p = UnityParams(A3, 5)
    rng = random.Random(11)
    for _ in range(40):
        mu = tuple(rng.randrange(0, 14) for _ in range(3))
        mu0, mu1 = restricted_decompose(p, mu)
        assert tuple(a + p.l * b for a, b in zip(mu0, mu1)) == mu
        assert all(0 <= c < p.l for c in mu0)
        assert all(c >= 0 for c in mu1)


def test_lowest_alcove_examples():
    p = UnityParams(A1, 3)
    assert in_closed_lowest_alcove(p, (2,))
    assert not in_closed_lowest_alcove(p, (3,))
    p = UnityParams(A2, 3)
    assert in_closed_lowest_alcove(p, (0, 0))
    assert not in_closed_lowest_alcove(p, (1, 1))  # <(2,2), theta_vee> = 4 > 3
    assert in_closed_lowest_alcove(p, (1, 0))
    assert not in_closed_lowest_alcove(p, (-1, 0))  # not dominant
    # B2: theta_short_vee = 2 a1_vee + a2_vee, so <lam+rho, theta_vee> = 2x+y+3
    p = UnityParams(B2, 5)
    assert in_closed_lowest_alcove(p, (1, 0))  # 2+0+3 = 5 <= 5
    assert in_closed_lowest_alcove(p, (0, 2))  # 0+2+3 = 5
    assert not in_closed_lowest_alcove(p, (1, 1))  # 6 > 5


def test_b2_alcove_boundary_arithmetic():
    # independent brute check of the pairing in the alcove predicate
    from kostant.rootdata import pairing, rho, wadd

    p = UnityParams(B2, 5)
    theta = B2.highest_short_root
    for lam in itertools.product(range(4), repeat=2):
        expected = pairing(B2, wadd(lam, rho(B2)), theta) <= 5
        assert in_closed_lowest_alcove(p, lam) == expected


def test_regime_certificates():
    cert = polo_tilouine_regime(A2, 3, (0, 0))
    assert cert.verdict == "formula-guaranteed"
    assert cert.l_admissible and cert.l_ge_h_minus_1 and cert.in_lowest_alcove
    cert = polo_tilouine_regime(G2, 3, (0, 0))
    assert cert.verdict == "rejected"
    assert not cert.l_admissible
    cert = polo_tilouine_regime(G2, 9, (0, 0))
    assert cert.verdict == "rejected"
    cert = polo_tilouine_regime(A3, 3, (0, 0, 0))
    assert cert.verdict == "formula-guaranteed"  # h - 1 = 3 <= 3
    # A5 has h = 6, so l = 3 < 5 is the converse regime
    cert = polo_tilouine_regime(parse_type("A5"), 3, (0,) * 5)
    assert cert.verdict == "converse-regime"
    cert = polo_tilouine_regime(A2, 3, (1, 1))
    assert cert.verdict == "outside-guarantee"
    obj = cert.to_obj()
    assert obj["schema"] == "v1" and obj["h"] == 3 and obj["verdict"] == "outside-guarantee"


def test_bottom_alcove_checks_pass():
    assert bottom_alcove_weights_check(A2, (1,), 3).passed
    assert bottom_alcove_weights_check(B2, (1,), 3).passed
    assert bottom_alcove_weights_check(B2, (2,), 5).passed
    assert bottom_alcove_weights_check(A2, (), 3).passed


def test_bottom_alcove_preconditions():
    with pytest.raises(ValueError):
        bottom_alcove_weights_check(A2, (), 2)  # even l rejected
    with pytest.raises(ValueError):
        bottom_alcove_weights_check(B2, (1,), 1)
    with pytest.raises(ValueError):
        bottom_alcove_weights_check(G2, (1,), 3)  # l >= h-1 = 5 fails and 3 | l


def test_levi_alcove_componentwise():
    # J = {1, 3} in A3 splits into two A1 components
    assert levi_in_lowest_alcove(A3, (1, 3), 3, (0, 0, 0))
    assert levi_in_lowest_alcove(A3, (1, 3), 3, (2, -5, 1))
    assert not levi_in_lowest_alcove(A3, (1, 3), 3, (3, 0, 0))
    assert not levi_in_lowest_alcove(A3, (1, 3), 3, (-1, 0, 0))
