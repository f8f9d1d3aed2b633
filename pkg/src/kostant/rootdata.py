"""Root system tables for the irreducible types A..G.

Conventions used throughout the package:

  * Simple roots are numbered 1..rank following Bourbaki.
  * ``cartan[i][j] = <alpha_j, alpha_i_vee>`` (0-indexed internally), so a
    root's fundamental-weight coordinates are ``cartan @ simple_coords``.
  * The inner product is normalized so that every short root has squared
    length 2.
  * Weights are plain tuples of ints in fundamental-weight coordinates.
  * Positive roots are ordered by height, then lexicographically on their
    simple-root coordinates; this order is also the one fixing the signs of
    the Chevalley structure constants via extraspecial pairs.

Chevalley basis: x_gamma for gamma in Phi and h_i = alpha_i_vee, with
[x_a, x_b] = N(a,b) x_{a+b}, [x_a, x_{-a}] = h_a, N(-a,-b) = -N(a,b) and
|N(a,b)| = p+1 where p is the largest integer with b - p*a in Phi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapExceededError

MAX_RANK = 8

_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}

_WEYL_ORDERS = {
    "A": lambda r: _factorial(r + 1),
    "B": lambda r: 2**r * _factorial(r),
    "C": lambda r: 2**r * _factorial(r),
    "D": lambda r: 2 ** (r - 1) * _factorial(r),
    "E": lambda r: {6: 51840, 7: 2903040, 8: 696729600}[r],
    "F": lambda r: 1152,
    "G": lambda r: 12,
}


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _dynkin_data(type_label, rank):
    """Edges of the Dynkin diagram (0-indexed) and squared lengths of the simple roots."""
    chain = [(i, i + 1) for i in range(rank - 1)]
    if type_label == "A":
        return chain, [2] * rank
    if type_label == "B":
        return chain, [4] * (rank - 1) + [2]
    if type_label == "C":
        return chain, [2] * (rank - 1) + [4]
    if type_label == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)], [2] * rank
    if type_label == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        edges += [(5, 6)] if rank >= 7 else []
        edges += [(6, 7)] if rank == 8 else []
        return edges, [2] * rank
    if type_label == "F":
        return chain, [4, 4, 2, 2]
    if type_label == "G":
        return chain, [2, 6]
    raise AssertionError(type_label)


def validate_type(type_label, rank):
    """Reject (type, rank) pairs that do not name an irreducible system of rank <= MAX_RANK."""
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if type_label not in ok:
        raise ValueError(f"unknown type label {type_label!r}; expected one of A..G")
    if rank > MAX_RANK:
        raise ValueError(f"rank {rank} exceeds the supported maximum {MAX_RANK}")
    if not ok[type_label]:
        raise ValueError(
            f"{type_label}{rank} is not a supported irreducible type "
            "(need A: r>=1, B/C: r>=2, D: r>=3, E: 6..8, F: 4, G: 2)"
        )


@dataclass(frozen=True)
class Root:
    """A root in both coordinatizations, plus cached pairing data.

    simple_coords: coefficients on the simple roots (all >=0 or all <=0).
    weight_coords: the same root in fundamental-weight coordinates.
    coroot_coords: expansion of the coroot on the simple coroots (integers).
    """

    simple_coords: tuple
    weight_coords: tuple
    coroot_coords: tuple
    norm_sq: int
    height: int
    index: int

    def __post_init__(self):
        neg = any(c < 0 for c in self.simple_coords)
        pos = any(c > 0 for c in self.simple_coords)
        if neg and pos:
            raise ValueError(f"mixed-sign coordinates {self.simple_coords} do not form a root")

    @property
    def is_positive(self):
        return self.height > 0


class RootSystem:
    """Immutable tables for one irreducible root system.

    Instances are built by :func:`build_root_system` and cached; two calls
    with the same (type, rank) return the same object.
    """

    def __init__(self, type_label, rank):
        validate_type(type_label, rank)
        self.type_label = type_label
        self.rank = rank
        edges, norms = _dynkin_data(type_label, rank)
        self.simple_norms = tuple(norms)

        gram = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            gram[i][i] = norms[i]
        for i, j in edges:
            gram[i][j] = gram[j][i] = -max(norms[i], norms[j]) // 2
        self.gram = tuple(tuple(row) for row in gram)

        cartan = [[2 * gram[i][j] // norms[i] for j in range(rank)] for i in range(rank)]
        for i in range(rank):
            for j in range(rank):
                assert 2 * gram[i][j] % norms[i] == 0
        self.cartan = tuple(tuple(row) for row in cartan)

        self._build_roots()
        assert len(self.positive_roots) == _ROOT_COUNTS[type_label](rank)
        self.cartan_inv = _invert_fraction_matrix(self.cartan)
        self._build_chevalley()
        if rank <= 4:
            self._check_jacobi()

    # -- construction -----------------------------------------------------

    def _build_roots(self):
        rank = self.rank
        coords_seen = set()
        by_height = [[tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]]
        coords_seen.update(by_height[0])
        while True:
            nxt = set()
            for c in by_height[-1]:
                for i in range(rank):
                    pairing = sum(self.cartan[i][j] * c[j] for j in range(rank))
                    p = 0
                    while True:
                        lower = list(c)
                        lower[i] -= p + 1
                        if all(v == 0 for v in lower):
                            break
                        if tuple(lower) not in coords_seen and tuple(-v for v in lower) not in coords_seen:
                            break
                        p += 1
                    if p - pairing > 0:
                        up = list(c)
                        up[i] += 1
                        nxt.add(tuple(up))
            if not nxt:
                break
            level = sorted(nxt)
            by_height.append(level)
            coords_seen.update(level)

        roots = []
        for level in by_height:
            for c in sorted(level):
                norm = self._inner_sc(c, c)
                coroot = tuple(c[i] * self.simple_norms[i] // norm for i in range(rank))
                assert all(c[i] * self.simple_norms[i] % norm == 0 for i in range(rank))
                roots.append(
                    Root(
                        simple_coords=c,
                        weight_coords=tuple(
                            sum(self.cartan[i][j] * c[j] for j in range(rank)) for i in range(rank)
                        ),
                        coroot_coords=coroot,
                        norm_sq=norm,
                        height=sum(c),
                        index=len(roots),
                    )
                )
        self.positive_roots = tuple(roots)
        self._pos_by_coords = {r.simple_coords: r for r in roots}
        self.highest_root = roots[-1]
        short = min(r.norm_sq for r in roots)
        self.highest_short_root = max(
            (r for r in roots if r.norm_sq == short), key=lambda r: (r.height, r.simple_coords)
        )
        self.coxeter_number = self.highest_root.height + 1

    def _inner_sc(self, a, b):
        return sum(self.gram[i][j] * a[i] * b[j] for i in range(self.rank) for j in range(self.rank))

    def _build_chevalley(self):
        """Structure constants via extraspecial pairs, processed by root height."""
        pos = self.positive_roots
        m = len(pos)
        coords = [r.simple_coords for r in pos]
        index_of = {c: k for k, c in enumerate(coords)}
        special = {}

        def chain_p(a, b):
            # largest p with b - p*a a root
            p = 0
            while True:
                c = tuple(b[i] - (p + 1) * a[i] for i in range(self.rank))
                if not self._is_root_coords(c):
                    return p
                p += 1

        def n_signed(x, y):
            # x, y signed indices (1-based magnitude); sum must be a root
            if x > 0 and y > 0:
                return special[(x - 1, y - 1)]
            if x < 0 and y < 0:
                return -n_signed(-x, -y)
            if x < 0:
                return -n_signed(y, x)
            a, b = pos[x - 1].simple_coords, pos[-y - 1].simple_coords
            zc = tuple(-(a[i] - b[i]) for i in range(self.rank))  # z = -(x+y)
            zr = self._pos_by_coords.get(zc)
            if zr is not None:  # z positive: N(x,y) = N(z,x) * |z|^2 / |y|^2
                val = Fraction(special[(zr.index, x - 1)] * zr.norm_sq, pos[-y - 1].norm_sq)
            else:  # z negative: N(x,y) = N(y,z) * |z|^2 / |x|^2 and N(y,z) = -N(-y,-z)
                zr = self._pos_by_coords[tuple(-v for v in zc)]
                val = -Fraction(special[(-y - 1, zr.index)] * zr.norm_sq, pos[x - 1].norm_sq)
            assert val.denominator == 1
            return int(val)

        for c_idx in range(m):
            gamma = coords[c_idx]
            pairs = []
            for a_idx in range(m):
                rest = tuple(gamma[i] - coords[a_idx][i] for i in range(self.rank))
                b = index_of.get(rest)
                if b is not None and a_idx < b:
                    pairs.append((a_idx, b))
            if not pairs:
                continue
            a1, b1 = pairs[0]
            n0 = chain_p(coords[a1], coords[b1]) + 1
            special[(a1, b1)] = n0
            special[(b1, a1)] = -n0
            denom = -Fraction(n0 * pos[b1].norm_sq, pos[c_idx].norm_sq)  # N(gamma, -alpha1)
            for a_idx, b_idx in pairs[1:]:
                t = 0
                d1 = tuple(coords[a_idx][i] - coords[a1][i] for i in range(self.rank))
                if self._is_root_coords(d1):
                    k = index_of[d1]
                    t += n_signed(-(a1 + 1), a_idx + 1) * special[(k, b_idx)]
                d2 = tuple(coords[b_idx][i] - coords[a1][i] for i in range(self.rank))
                if self._is_root_coords(d2):
                    k = index_of[d2]
                    t += n_signed(b_idx + 1, -(a1 + 1)) * special[(k, a_idx)]
                val = Fraction(-t) / denom
                assert val.denominator == 1 and val != 0
                nval = int(val)
                assert abs(nval) == chain_p(coords[a_idx], coords[b_idx]) + 1
                special[(a_idx, b_idx)] = nval
                special[(b_idx, a_idx)] = -nval

        # expand to a full signed table
        table = {}
        signed = [k + 1 for k in range(m)] + [-(k + 1) for k in range(m)]
        for x in signed:
            cx = self._signed_coords(x)
            for y in signed:
                cy = self._signed_coords(y)
                s = tuple(cx[i] + cy[i] for i in range(self.rank))
                if self._is_root_coords(s):
                    table[(x, y)] = n_signed(x, y)
        self._n_table = table

    def _check_jacobi(self):
        """Exhaustive Jacobi identity over all triples of root vectors (rank <= 4 only)."""
        m = len(self.positive_roots)
        signed = [k + 1 for k in range(m)] + [-(k + 1) for k in range(m)]
        for x, y, z in itertools.product(signed, repeat=3):
            acc = {}
            for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                for key, coeff in self._double_bracket(a, b, c):
                    acc[key] = acc.get(key, 0) + coeff
            bad = {k: v for k, v in acc.items() if v != 0}
            if bad:
                raise AssertionError(f"Jacobi identity fails at triple {(x, y, z)}: {bad}")

    def _double_bracket(self, a, b, c):
        """Terms of [[x_a, x_b], x_c] on the basis {('r', k), ('h', i)}."""
        ca, cb = self._signed_coords(a), self._signed_coords(b)
        if b == -a:
            # [x_a, x_{-a}] = h_a, then [h_a, x_c] = <gamma_c, a_vee> x_c
            r = self.positive_roots[abs(a) - 1]
            cor = r.coroot_coords if a > 0 else tuple(-v for v in r.coroot_coords)
            wc = self._signed_weight_coords(c)
            coeff = sum(cor[i] * wc[i] for i in range(self.rank))
            return [(("r", c), coeff)] if coeff else []
        s = tuple(ca[i] + cb[i] for i in range(self.rank))
        if not self._is_root_coords(s):
            return []
        n1 = self._n_table[(a, b)]
        ab = self._signed_index(s)
        if c == -ab:
            r = self.positive_roots[abs(ab) - 1]
            sign = 1 if ab > 0 else -1
            return [(("h", i), n1 * sign * v) for i, v in enumerate(r.coroot_coords) if v]
        s2 = tuple(s[i] + self._signed_coords(c)[i] for i in range(self.rank))
        if not self._is_root_coords(s2):
            return []
        return [(("r", self._signed_index(s2)), n1 * self._n_table[(ab, c)])]

    # -- signed-root helpers ----------------------------------------------

    def _is_root_coords(self, c):
        return c in self._pos_by_coords or tuple(-v for v in c) in self._pos_by_coords

    def _signed_coords(self, k):
        r = self.positive_roots[abs(k) - 1].simple_coords
        return r if k > 0 else tuple(-v for v in r)

    def _signed_weight_coords(self, k):
        r = self.positive_roots[abs(k) - 1].weight_coords
        return r if k > 0 else tuple(-v for v in r)

    def _signed_index(self, coords):
        r = self._pos_by_coords.get(coords)
        if r is not None:
            return r.index + 1
        return -(self._pos_by_coords[tuple(-v for v in coords)].index + 1)

    def n_coeff(self, a, b):
        """Chevalley constant N(a, b) for signed root indices; 0 if a+b is not a root."""
        return self._n_table.get((a, b), 0)

    # -- hashing ------------------------------------------------------------

    def __repr__(self):
        return f"RootSystem({self.type_label}{self.rank})"

    def __hash__(self):
        return hash((self.type_label, self.rank))

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.type_label, self.rank) == (
            other.type_label,
            other.rank,
        )

    def weyl_order(self):
        return _WEYL_ORDERS[self.type_label](self.rank)


def _invert_fraction_matrix(mat):
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def build_root_system(type_label, rank):
    """Construct (and cache) the root system of the given irreducible type."""
    return RootSystem(type_label, int(rank))


def parse_type(text):
    """Parse a textual label like "A2" or "G2" into a cached RootSystem."""
    text = text.strip()
    if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
        raise ValueError(f"cannot parse root system label {text!r}; expected e.g. 'A2', 'B2'")
    return build_root_system(text[0].upper(), int(text[1:]))


def parse_weight(rs, text):
    """Parse comma-separated fundamental-weight coordinates, e.g. "1,-2"."""
    parts = [p.strip() for p in str(text).split(",")] if str(text).strip() != "" else []
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"weight {text!r} is not a comma-separated integer vector") from None
    check_weight(rs, coords)
    return coords


def check_weight(rs, weight):
    if len(weight) != rs.rank:
        raise ValueError(f"weight {weight} has length {len(weight)}; rank is {rs.rank}")
    return tuple(int(v) for v in weight)


def parse_subset(rs, text):
    """Parse a comma-separated list of 1-based simple indices; "" means the empty set."""
    text = str(text).strip()
    if text == "":
        return frozenset()
    try:
        idx = frozenset(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse simple-root subset {text!r}") from None
    return check_subset(rs, idx)


def check_subset(rs, J):
    J = frozenset(int(j) for j in J)
    bad = [j for j in J if not 1 <= j <= rs.rank]
    if bad:
        raise ValueError(f"simple-root indices {sorted(bad)} out of range 1..{rs.rank}")
    return J


# -- weight arithmetic (fundamental-weight coordinates) ---------------------


def wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def wneg(a):
    return tuple(-x for x in a)


def wscale(k, a):
    return tuple(k * x for x in a)


def zero_weight(rs):
    return (0,) * rs.rank


def rho(rs):
    """The half-sum of positive roots: all fundamental coordinates equal 1."""
    return (1,) * rs.rank


def is_dominant(rs, weight, J=None):
    """Dominance on all of Delta, or on the subset J (1-based indices)."""
    idx = range(rs.rank) if J is None else [j - 1 for j in J]
    return all(weight[i] >= 0 for i in idx)


def pairing(rs, weight, root):
    """<weight, root_vee> for a Root (exact integer for integral weights)."""
    return sum(c * w for c, w in zip(root.coroot_coords, weight))


def coxeter_number(rs):
    """Height of the highest root plus one."""
    return rs.coxeter_number


def nilradical_roots(rs, J):
    """Positive roots outside the span of J, in the fixed positive-root order."""
    J = check_subset(rs, J)
    return tuple(
        r for r in rs.positive_roots if any(r.simple_coords[j] != 0 for j in range(rs.rank) if (j + 1) not in J)
    )


def levi_positive_roots(rs, J):
    """Positive roots supported on J."""
    J = check_subset(rs, J)
    return tuple(
        r for r in rs.positive_roots if all(r.simple_coords[j] == 0 for j in range(rs.rank) if (j + 1) not in J)
    )


def levi_components(rs, J):
    """Connected components of the Dynkin subdiagram on J, as sorted 1-based index lists."""
    J = sorted(check_subset(rs, J))
    remaining = set(J)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in list(remaining):
                if rs.cartan[i - 1][j - 1] != 0:
                    remaining.discard(j)
                    comp.add(j)
                    frontier.append(j)
        comps.append(sorted(comp))
    return sorted(comps)


def weight_to_root_coords(rs, weight):
    """Express a weight in simple-root coordinates (a tuple of Fractions)."""
    return tuple(
        sum(rs.cartan_inv[i][j] * weight[j] for j in range(rs.rank)) for i in range(rs.rank)
    )


def root_coords_to_weight(rs, coords):
    return tuple(sum(rs.cartan[i][j] * coords[j] for j in range(rs.rank)) for i in range(rs.rank))


def inner_weights(rs, a, b):
    """Exact inner product of two weights (Fraction)."""
    ca = weight_to_root_coords(rs, a)
    cb = weight_to_root_coords(rs, b)
    return sum(
        rs.gram[i][j] * ca[i] * cb[j] for i in range(rs.rank) for j in range(rs.rank)
    )


def dominant_conjugate(rs, weight, J=None):
    """The unique (J-)dominant weight in the W_(J)-orbit of ``weight``."""
    idx = list(range(rs.rank)) if J is None else sorted(j - 1 for j in J)
    w = list(weight)
    moved = True
    while moved:
        moved = False
        for i in idx:
            if w[i] < 0:
                c = w[i]
                alpha = rs.positive_roots[_simple_index(rs, i)].weight_coords
                for k in range(rs.rank):
                    w[k] -= c * alpha[k]
                moved = True
    return tuple(w)


@lru_cache(maxsize=None)
def _simple_root_positions(rs):
    pos = {}
    for r in rs.positive_roots:
        if r.height == 1:
            pos[r.simple_coords.index(1)] = r.index
    return pos


def _simple_index(rs, i):
    """Index into positive_roots of the i-th (0-based) simple root."""
    return _simple_root_positions(rs)[i]


def simple_root(rs, i):
    """The i-th simple root (1-based)."""
    return rs.positive_roots[_simple_index(rs, i - 1)]
