import itertools

import pytest

from kostant.rootdata import (
    build_root_system,
    coxeter_number,
    dominant_conjugate,
    inner_weights,
    levi_components,
    levi_positive_roots,
    nilradical_roots,
    pairing,
    parse_subset,
    parse_type,
    parse_weight,
    rho,
    simple_root,
    wadd,
    weight_to_root_coords,
)

ALL_SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]

KNOWN_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10,
    "B2": 4, "B3": 9, "B4": 16, "C3": 9, "C4": 16,
    "D4": 12, "G2": 6, "F4": 24, "E6": 36,
}

KNOWN_COXETER = {
    "A1": 2, "A2": 3, "A3": 4, "A4": 5,
    "B2": 4, "B3": 6, "B4": 8, "C3": 6, "C4": 8,
    "D4": 6, "G2": 6, "F4": 12, "E6": 12,
}


@pytest.mark.parametrize("label", list(KNOWN_COUNTS))
def test_positive_root_counts(label):
    rs = parse_type(label)
    assert len(rs.positive_roots) == KNOWN_COUNTS[label]


@pytest.mark.parametrize("label", list(KNOWN_COXETER))
def test_coxeter_numbers(label):
    assert coxeter_number(parse_type(label)) == KNOWN_COXETER[label]


def test_cartan_matrices():
    assert build_root_system("A", 1).cartan == ((2,),)
    assert build_root_system("A", 2).cartan == ((2, -1), (-1, 2))
    # G2 with Bourbaki numbering: alpha_1 short
    g2 = build_root_system("G", 2)
    assert g2.cartan[0][0] == g2.cartan[1][1] == 2
    assert sorted((g2.cartan[0][1], g2.cartan[1][0])) == [-3, -1]
    assert g2.simple_norms == (2, 6)


@pytest.mark.parametrize("label", ALL_SMALL + ["E6", "E7", "E8"])
def test_short_root_normalization_and_heights(label):
    rs = parse_type(label)
    assert min(r.norm_sq for r in rs.positive_roots) == 2
    heights = [r.height for r in rs.positive_roots]
    assert heights == sorted(heights)
    for r in rs.positive_roots:
        assert r.height == sum(r.simple_coords)


@pytest.mark.parametrize("label", ALL_SMALL + ["E6", "E7", "E8"])
def test_sum_of_positive_roots_is_two_rho(label):
    rs = parse_type(label)
    total = (0,) * rs.rank
    for r in rs.positive_roots:
        total = wadd(total, r.weight_coords)
    assert total == (2,) * rs.rank


def test_g2_squared_lengths():
    rs = build_root_system("G", 2)
    assert sorted(set(r.norm_sq for r in rs.positive_roots)) == [2, 6]


def test_root_coordinatizations_agree():
    for label in ALL_SMALL:
        rs = parse_type(label)
        for r in rs.positive_roots:
            w = tuple(
                sum(rs.cartan[i][j] * r.simple_coords[j] for j in range(rs.rank))
                for i in range(rs.rank)
            )
            assert w == r.weight_coords


def test_pairing_examples():
    a2 = build_root_system("A", 2)
    w1 = (1, 0)
    assert pairing(a2, w1, simple_root(a2, 1)) == 1
    assert pairing(a2, w1, simple_root(a2, 2)) == 0
    high = a2.positive_roots[-1]  # alpha_1 + alpha_2
    assert pairing(a2, w1, high) == 1


@pytest.mark.parametrize("label", ALL_SMALL)
def test_rho_pairs_to_coxeter_minus_one_on_highest_short(label):
    # <rho, alpha_vee> = h - 1 for the highest short root
    rs = parse_type(label)
    assert pairing(rs, rho(rs), rs.highest_short_root) == coxeter_number(rs) - 1


def test_b2_highest_short_vs_long():
    b2 = build_root_system("B", 2)
    assert pairing(b2, rho(b2), b2.highest_short_root) == 3
    assert pairing(b2, rho(b2), b2.highest_root) == 2
    assert b2.highest_root.norm_sq == 4
    assert b2.highest_short_root.norm_sq == 2


def test_rho_is_all_ones():
    for label in ("A1", "A2", "F4"):
        rs = parse_type(label)
        assert rho(rs) == (1,) * rs.rank


def test_nilradical_examples():
    a2 = build_root_system("A", 2)
    assert len(nilradical_roots(a2, ())) == 3
    nil = nilradical_roots(a2, (1,))
    assert [r.simple_coords for r in nil] == [(0, 1), (1, 1)]
    assert nilradical_roots(a2, (1, 2)) == ()


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "B3", "G2"])
def test_nilradical_cardinality_and_closure(label):
    rs = parse_type(label)
    npos = len(rs.positive_roots)
    simples = list(range(1, rs.rank + 1))
    for k in range(rs.rank + 1):
        for J in itertools.combinations(simples, k):
            nil = nilradical_roots(rs, J)
            levi = levi_positive_roots(rs, J)
            assert len(nil) + len(levi) == npos
            coords = {r.simple_coords for r in nil}
            for a, b in itertools.combinations(coords, 2):
                s = tuple(x + y for x, y in zip(a, b))
                if rs._is_root_coords(s):
                    assert s in coords


def rank_le4_systems():
    return [parse_type(t) for t in ALL_SMALL]


@pytest.mark.parametrize("rs", rank_le4_systems(), ids=lambda r: repr(r))
def test_chevalley_constants_invariants(rs):
    m = len(rs.positive_roots)
    signed = [k + 1 for k in range(m)] + [-(k + 1) for k in range(m)]

    def coords(k):
        return rs._signed_coords(k)

    def p_val(a, b):
        p = 0
        while True:
            c = tuple(x - (p + 1) * y for x, y in zip(coords(b), coords(a)))
            if not rs._is_root_coords(c):
                return p
            p += 1

    for a in signed:
        for b in signed:
            s = tuple(x + y for x, y in zip(coords(a), coords(b)))
            n = rs.n_coeff(a, b)
            if rs._is_root_coords(s):
                assert n != 0
                assert n == -rs.n_coeff(b, a)
                assert rs.n_coeff(-a, -b) == -n
                assert abs(n) == p_val(a, b) + 1
                # N(a,b) * N(-a,-b) = -(p+1)^2
                assert n * rs.n_coeff(-a, -b) == -((p_val(a, b) + 1) ** 2)
            else:
                assert n == 0


def test_jacobi_checked_at_construction():
    # construction of every rank<=4 system runs the exhaustive Jacobi check
    for label in ALL_SMALL:
        parse_type(label)


def test_invalid_types_rejected():
    for label, rank in [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 3)]:
        with pytest.raises(ValueError):
            build_root_system(label, rank)
    with pytest.raises(ValueError):
        build_root_system("A", 9)


def test_parsing():
    rs = parse_type("B2")
    assert rs.type_label == "B" and rs.rank == 2
    assert parse_weight(rs, "1,-2") == (1, -2)
    with pytest.raises(ValueError):
        parse_weight(rs, "1")
    with pytest.raises(ValueError):
        parse_weight(rs, "1,x")
    assert parse_subset(rs, "") == frozenset()
    assert parse_subset(rs, "1,2") == frozenset({1, 2})
    with pytest.raises(ValueError):
        parse_subset(rs, "3")
    with pytest.raises(ValueError):
        parse_type("A")


def test_dominant_conjugate():
    a2 = build_root_system("A", 2)
    assert dominant_conjugate(a2, (1, 1)) == (1, 1)
    assert dominant_conjugate(a2, (-1, -1)) == (1, 1)  # lowest weight of adjoint
    assert dominant_conjugate(a2, (-1, 2), J=(1,)) == (1, 1)


def test_inner_weights_and_root_coords():
    a2 = build_root_system("A", 2)
    # (rho, rho) = (alpha_1 + alpha_2, alpha_1 + alpha_2) = 2 + 2 - 2 = 2
    assert inner_weights(a2, (1, 1), (1, 1)) == 2
    assert weight_to_root_coords(a2, (1, 1)) == (1, 1)
    g2 = build_root_system("G", 2)
    assert weight_to_root_coords(g2, (1, 1)) == (5, 3)


def test_levi_components():
    a3 = build_root_system("A", 3)
    assert levi_components(a3, (1, 3)) == [[1], [3]]
    assert levi_components(a3, (1, 2)) == [[1, 2]]
    assert levi_components(a3, ()) == []
