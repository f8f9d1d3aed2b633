"""Brute-force cohomology oracle for the nilradical acting on L(lambda).

The cochain complex is Hom(Lambda^n u, L) with u spanned by the positive
root vectors e_gamma, gamma outside the Levi. This positive-side convention
is forced by the rank-1 computation: H^0 = ker(e) is the highest line, so
H^n(u, L(lambda)) carries the dot-orbit weights w . lambda with l(w) = n.

Cochains are graded by t-weight (module weight minus the subset sum); the
differential is block diagonal across t-weights and d . d = 0 is verified
exactly at build time. Ranks are computed per block by fraction-free
elimination over the integers after clearing row denominators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ._linalg import sparse_int_rank
from .charring import FormalCharacter, decompose_levi
from .errors import CapExceededError, InvariantError
from .repmodel import resolve_dim_cap
from .rootdata import check_subset, nilradical_roots, wadd, wsub

DEFAULT_NILRADICAL_CAP = 12


@dataclass
class CochainComplex:
    rs: object
    J: frozenset
    module: object
    nil: tuple  # nilradical Root objects, fixed order
    blocks: list  # per degree: {t_weight: [(S, mu, i), ...]}
    diffs: list  # per degree n: {t_weight: {(row, col): value}} for d^n
    _rank_cache: dict = field(default_factory=dict)

    @property
    def top_degree(self):
        return len(self.nil)

    def degree_dimension(self, n):
        if not 0 <= n <= self.top_degree:
            return 0
        return sum(len(v) for v in self.blocks[n].values())

    def block_rank(self, n, tw):
        """Rank of the t-weight block of d^n (0 outside the complex)."""
        if not 0 <= n < self.top_degree:
            return 0
        key = (n, tw)
        hit = self._rank_cache.get(key)
        if hit is not None:
            return hit
        entries = self.diffs[n].get(tw)
        rank = _sparse_rank(entries) if entries else 0
        self._rank_cache[key] = rank
        return rank


def _sparse_rank(entries):
    rows = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
    if not rows:
        return 0
    cleared = []
    for row in rows.values():
        lcm = 1
        for v in row.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                d = v.denominator
                g = _gcd(lcm, d)
                lcm = lcm // g * d
        cleared.append({c: int(v * lcm) for c, v in row.items()})
    return sparse_int_rank(cleared)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def build_complex(rs, J, module, nil_cap=DEFAULT_NILRADICAL_CAP, dim_cap=None, _flip_sign_pair=None):
    """Chevalley-Eilenberg complex of the nilradical with coefficients in a module.

    _flip_sign_pair is a fault-injection hook for negative-control tests: it
    negates the structure constant of one unordered pair of nilradical roots
    in the bracket used by the differential (and nothing else), which must be
    caught by the d . d = 0 check or by a downstream verification mismatch.
    """
    J = check_subset(rs, J)
    nil = nilradical_roots(rs, J)
    if len(nil) > nil_cap:
        raise CapExceededError(
            f"nilradical has {len(nil)} roots, above the cap {nil_cap}"
        )
    if module.dimension > resolve_dim_cap(dim_cap):
        raise CapExceededError(
            f"module dimension {module.dimension} exceeds the cap {resolve_dim_cap(dim_cap)}"
        )
    npos = {r.index: k for k, r in enumerate(nil)}  # global root index -> nil position

    def bracket_coeff(pa, pb):
        # N(gamma_a, gamma_b) for nil positions, with optional injected sign fault
        v = rs.n_coeff(nil[pa].index + 1, nil[pb].index + 1)
        if v and _flip_sign_pair is not None and {pa, pb} == set(_flip_sign_pair):
            v = -v
        return v

    nil_wc = [r.weight_coords for r in nil]
    module_weights = module.weights
    dims = module.dims
    n_roots = len(nil)

    # bases: per degree, t-weight -> ordered cochain list; offsets[(S, mu)] -> (tw, base)
    blocks = [dict() for _ in range(n_roots + 1)]
    offsets = [dict() for _ in range(n_roots + 1)]
    subset_sums = {}
    for n in range(n_roots + 1):
        for S in itertools.combinations(range(n_roots), n):
            total = (0,) * rs.rank
            for p in S:
                total = wadd(total, nil_wc[p])
            subset_sums[S] = total
            for mu in module_weights:
                tw = wsub(mu, total)
                lst = blocks[n].setdefault(tw, [])
                offsets[n][(S, mu)] = (tw, len(lst))
                lst.extend((S, mu, i) for i in range(dims[mu]))

    diffs = [dict() for _ in range(n_roots)]
    for n in range(n_roots):
        dn = diffs[n]
        for T in itertools.combinations(range(n_roots), n + 1):
            # action terms: sum_i (-1)^i e_{t_i} . f(... t_i omitted ...)
            for i, p in enumerate(T):
                S = T[:i] + T[i + 1 :]
                sign = -1 if i % 2 else 1
                g = nil[p].index
                for mu, mat in module.e_blocks.get(g, {}).items():
                    nu = wadd(mu, nil_wc[p])
                    tw, src_base = offsets[n][(S, mu)]
                    _, tgt_base = offsets[n + 1][(T, nu)]
                    block = dn.setdefault(tw, {})
                    for r, row in enumerate(mat):
                        tr = tgt_base + r
                        for c, v in enumerate(row):
                            if v:
                                key = (tr, src_base + c)
                                block[key] = block.get(key, 0) + sign * v
            # bracket terms: sum_{i<j} (-1)^{i+j} f([e_i, e_j], ...)
            for i, j in itertools.combinations(range(n + 1), 2):
                pa, pb = T[i], T[j]
                cval = bracket_coeff(pa, pb)
                if not cval:
                    continue
                scoords = tuple(
                    a + b
                    for a, b in zip(nil[pa].simple_coords, nil[pb].simple_coords)
                )
                gsum = rs._pos_by_coords[scoords].index
                psum = npos[gsum]  # closure: the sum stays in the nilradical
                rest = tuple(p for k, p in enumerate(T) if k not in (i, j))
                if psum in rest:
                    continue  # repeated wedge factor
                S = tuple(sorted(rest + (psum,)))
                k = S.index(psum)
                sign = (-1) ** (i + j + k)
                coeff = sign * cval
                for mu in module_weights:
                    tw, src_base = offsets[n][(S, mu)]
                    _, tgt_base = offsets[n + 1][(T, mu)]
                    block = dn.setdefault(tw, {})
                    for t in range(dims[mu]):
                        key = (tgt_base + t, src_base + t)
                        block[key] = block.get(key, 0) + coeff

    cx = CochainComplex(rs=rs, J=J, module=module, nil=nil, blocks=blocks, diffs=diffs)
    _check_d_squared(cx)
    return cx


def _int_scaled(groups):
    """Scale each group (row or column) of Fraction entries to integers."""
    out = {}
    for key, items in groups.items():
        lcm = 1
        for _, v in items:
            if isinstance(v, Fraction) and v.denominator != 1:
                d = v.denominator
                g = _gcd(lcm, d)
                lcm = lcm // g * d
        out[key] = [(pos, int(v * lcm)) for pos, v in items]
    return out


def _check_d_squared(cx):
    # zero-ness of A.B is invariant under scaling rows of A and columns of B,
    # so both factors are made integral first to avoid Fraction arithmetic
    for n in range(cx.top_degree - 1):
        lower = cx.diffs[n]
        upper = cx.diffs[n + 1]
        for tw, b_entries in lower.items():
            a_entries = upper.get(tw)
            if not a_entries:
                continue
            a_rows = {}
            for (r, c), v in a_entries.items():
                if v:
                    a_rows.setdefault(r, []).append((c, v))
            b_cols = {}
            for (k, c), v in b_entries.items():
                if v:
                    b_cols.setdefault(c, []).append((k, v))
            a_by_col = {}
            for r, items in _int_scaled(a_rows).items():
                for c, v in items:
                    a_by_col.setdefault(c, []).append((r, v))
            for c, items in _int_scaled(b_cols).items():
                acc = {}
                for k, v in items:
                    for r, va in a_by_col.get(k, ()):
                        acc[r] = acc.get(r, 0) + va * v
                bad = {r: v for r, v in acc.items() if v}
                if bad:
                    raise InvariantError(
                        f"d.d != 0 in degrees {n}->{n+2} at t-weight {tw}: "
                        f"first bad entries {sorted(bad.items())[:3]}"
                    )


def cohomology(cx):
    """Exact per-degree cohomology characters of the complex."""
    out = []
    for n in range(cx.top_degree + 1):
        terms = {}
        for tw, basis in cx.blocks[n].items():
            dim = len(basis)
            h = dim - cx.block_rank(n, tw) - cx.block_rank(n - 1, tw)
            assert h >= 0
            if h:
                terms[tw] = h
        out.append(FormalCharacter(terms))
    return out


def cohomology_levi(rs, J, degree_characters):
    """Levi decomposition of each degree; a DecompositionError here falsifies
    complete reducibility of the cohomology and is a hard verification failure."""
    return [decompose_levi(rs, J, ch) for ch in degree_characters]
