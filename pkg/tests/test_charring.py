import itertools

import pytest

from kostant.charring import (
    FormalCharacter,
    decompose_levi,
    euler_characteristic,
    exterior_character,
    is_wj_invariant,
    simple_character,
    weyl_dimension,
)
from kostant.errors import DecompositionError
from kostant.rootdata import build_root_system, nilradical_roots, parse_type
from kostant.weylgroup import act, dot_act, enumerate_weyl, min_coset_reps

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
B2 = build_root_system("B", 2)
G2 = build_root_system("G", 2)

FULL = {
    "A1": (1,),
    "A2": (1, 2),
    "B2": (1, 2),
    "G2": (1, 2),
}


def test_simple_character_a1():
    ch = simple_character(A1, (1,), (1,))
    assert ch == FormalCharacter({(1,): 1, (-1,): 1})


def test_simple_character_a2_adjoint():
    ch = simple_character(A2, (1, 2), (1, 1))
    assert ch.dimension() == 8
    assert ch.multiplicity((0, 0)) == 2
    assert ch.multiplicity((1, 1)) == 1
    assert ch.multiplicity((-1, -1)) == 1


def test_simple_character_levi_string():
    ch = simple_character(A2, (1,), (1, -2))
    assert ch == FormalCharacter({(1, -2): 1, (-1, -1): 1})
    with pytest.raises(ValueError):
        simple_character(A2, (1,), (-1, 0))


def test_simple_character_empty_levi():
    ch = simple_character(A2, (), (3, -7))
    assert ch == FormalCharacter({(3, -7): 1})


def test_weyl_dimension_examples():
    assert weyl_dimension(A2, (1, 2), (1, 1)) == 8
    assert weyl_dimension(A2, (1, 2), (0, 0)) == 1
    # Bourbaki B2: alpha_2 short, w1 is the 5-dim natural, w2 the 4-dim spinor
    assert weyl_dimension(B2, (1, 2), (1, 0)) == 5
    assert weyl_dimension(B2, (1, 2), (0, 1)) == 4
    assert weyl_dimension(G2, (1, 2), (1, 0)) == 7
    assert weyl_dimension(G2, (1, 2), (0, 1)) == 14


@pytest.mark.parametrize("label", list(FULL))
def test_dimension_formula_matches_freudenthal(label):
    rs = parse_type(label)
    full = FULL[label]
    bound = 2 if label != "G2" else 1
    for lam in itertools.product(range(bound + 1), repeat=rs.rank):
        assert simple_character(rs, full, lam).dimension() == weyl_dimension(rs, full, lam)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_simple_character_wj_invariance(label):
    rs = parse_type(label)
    for J in [(1,), (2,), (1, 2)]:
        for lam in [(0, 0), (1, 0), (2, 1)]:
            lam_fixed = tuple(
                abs(c) if (i + 1) in J else c for i, c in enumerate(lam)
            )
            ch = simple_character(rs, J, lam_fixed)
            assert is_wj_invariant(rs, J, ch)


def test_exterior_examples():
    assert exterior_character(A2, (), 0) == FormalCharacter({(0, 0): 1})
    assert exterior_character(A2, (), 3) == FormalCharacter({(-2, -2): 1})
    nil = nilradical_roots(A2, (1,))
    assert [r.simple_coords for r in nil] == [(0, 1), (1, 1)]
    assert exterior_character(A2, (1,), 1) == FormalCharacter({(1, -2): 1, (-1, -1): 1})
    with pytest.raises(ValueError):
        exterior_character(A2, (), 4)


@pytest.mark.parametrize("label", list(FULL))
def test_exterior_dimensions_binomial(label):
    import math

    rs = parse_type(label)
    for k in range(rs.rank + 1):
        for J in itertools.combinations(range(1, rs.rank + 1), k):
            n_roots = len(nilradical_roots(rs, J))
            dims = [exterior_character(rs, J, n).dimension() for n in range(n_roots + 1)]
            assert dims == [math.comb(n_roots, n) for n in range(n_roots + 1)]
            if n_roots:
                assert sum((-1) ** n * d for n, d in enumerate(dims)) == 0


def test_euler_characteristic_a1():
    chi = euler_characteristic(A1, (), (1,))
    assert chi == FormalCharacter({(1,): 1, (-3,): -1})


def test_euler_characteristic_full_j_is_simple():
    for rs, lam in [(A2, (1, 1)), (B2, (1, 0))]:
        full = tuple(range(1, rs.rank + 1))
        assert euler_characteristic(rs, full, lam) == simple_character(rs, full, lam)


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_euler_equals_alternating_sum_over_coset_reps(label):
    # chi(lam) = sum over w in JW of (-1)^{l(w)} ch L_J(w . lam), the
    # character form of the cohomology formula; exercises the whole stack.
    rs = parse_type(label)
    bound = 1
    for k in range(rs.rank + 1):
        for J in itertools.combinations(range(1, rs.rank + 1), k):
            for lam in itertools.product(range(bound + 1), repeat=rs.rank):
                chi = euler_characteristic(rs, J, lam)
                alt = FormalCharacter()
                for w in min_coset_reps(rs, J):
                    term = simple_character(rs, J, dot_act(rs, w, lam))
                    alt = alt + term if w.length % 2 == 0 else alt - term
                assert chi == alt


def test_key_weight_multiplicity_lemma_small():
    # multiplicity of w.0 in ch Lambda^n equals delta(l(w), n)
    for rs in (A2, B2):
        for k in range(rs.rank + 1):
            for J in itertools.combinations(range(1, rs.rank + 1), k):
                nil = nilradical_roots(rs, J)
                exts = [exterior_character(rs, J, n) for n in range(len(nil) + 1)]
                for w in min_coset_reps(rs, J):
                    target = dot_act(rs, w, (0,) * rs.rank)
                    for n, ext in enumerate(exts):
                        expected = 1 if n == w.length else 0
                        assert ext.multiplicity(target) == expected


def test_decompose_levi_examples():
    d = decompose_levi(A2, (1,), simple_character(A2, (1,), (1, -2)))
    assert d.summands == (((1, -2), 1),)
    chi = FormalCharacter({(1, -2): 1, (-1, -1): 1, (0, -3): 1})
    d = decompose_levi(A2, (1,), chi)
    assert d.summands == (((0, -3), 1), ((1, -2), 1))
    chi = simple_character(A1, (1,), (2,)) + FormalCharacter({(0,): 2})
    d = decompose_levi(A1, (1,), chi)
    assert d.summands == (((0,), 2), ((2,), 1))
    assert d.to_character(A1, (1,)) == chi


def test_decompose_levi_roundtrip():
    for J in [(), (1,), (2,), (1, 2)]:
        chi = FormalCharacter()
        pieces = [((1, 1), 2), ((0, 0), 1)]
        for lam, m in pieces:
            chi = chi + simple_character(B2, J, lam) * m
        d = decompose_levi(B2, J, chi)
        assert d.to_character(B2, J) == chi
        assert d.multiplicity((1, 1)) == 2


def test_decompose_levi_failure_is_signalled():
    # W-invariant but not a nonnegative sum of simples: missing interior weight
    chi = FormalCharacter({(2,): 1, (-2,): 1})
    with pytest.raises(DecompositionError):
        decompose_levi(A1, (1,), chi)
    # no J-dominant weight at all
    with pytest.raises(DecompositionError):
        decompose_levi(A1, (1,), FormalCharacter({(-1,): 1}))


def test_character_algebra():
    a = FormalCharacter({(1, 0): 1})
    b = FormalCharacter({(0, 1): 2})
    assert (a * b).terms == {(1, 1): 2}
    assert (a + b - b) == a
    assert (a * 0).is_zero()
    assert 3 * a == FormalCharacter({(1, 0): 3})


def test_character_json_golden():
    ch = simple_character(A2, (1, 2), (1, 0))
    obj = ch.to_obj()
    assert obj == [
        {"weight": [-1, 1], "mult": 1},
        {"weight": [0, -1], "mult": 1},
        {"weight": [1, 0], "mult": 1},
    ]
    assert FormalCharacter.from_obj(obj) == ch


def test_simple_character_is_w_invariant_under_full_group():
    ch = simple_character(B2, (1, 2), (1, 1))
    for w in enumerate_weyl(B2):
        moved = {act(B2, w, mu): m for mu, m in ch.terms.items()}
        assert moved == ch.terms
