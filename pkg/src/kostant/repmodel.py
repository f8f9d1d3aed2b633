"""Explicit construction of the simple module L(lambda) over exact rationals.

The Verma module M(lambda) is realized transiently, weight space by weight
space, on PBW monomials f_{g1}^{a1} f_{g2}^{a2} ... v+ indexed by Kostant
partitions of lambda - mu (roots in the fixed positive-root order). The
contravariant (Shapovalov) form is computed through the transpose
antiautomorphism e <-> f; its radical is the maximal submodule, so pivot
monomials of the form give a basis of L(lambda) and generator matrices are
obtained by projecting the Verma action along the form.

All arithmetic is exact: the form is integral on monomials, quotient
matrices are Fractions. No floating point is used anywhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._linalg import bareiss_pivots, identity, invert_rational, is_zero_matrix, mat_mul, mat_scale, mat_sub, transpose, zeros
from .charring import simple_character, weyl_dimension
from .errors import CapExceededError
from .rootdata import (
    check_weight,
    dominant_conjugate,
    is_dominant,
    pairing,
    wadd,
    weight_to_root_coords,
    wsub,
)

DEFAULT_DIM_CAP = 2000
ENV_DIM_CAP = "KOSTANT_MAX_DIM"


def resolve_dim_cap(cap=None):
    if cap is not None:
        return int(cap)
    env = os.environ.get(ENV_DIM_CAP)
    return int(env) if env else DEFAULT_DIM_CAP


def kostant_partitions(rs, nu):
    """All ways to write nu (a weight in the root lattice) as an N-combination
    of positive roots; empty when nu is not a nonnegative integral combination.

    Returns a list of multisets, each a tuple of Root objects sorted by the
    root order; the count is the Kostant partition function.
    """
    nu = check_weight(rs, nu)
    coords = weight_to_root_coords(rs, nu)
    if any(c.denominator != 1 or c < 0 for c in coords):
        return []
    coords = tuple(int(c) for c in coords)
    out = []
    for mono in _partition_monomials(rs, coords):
        roots = []
        for idx, exp in mono:
            roots.extend([rs.positive_roots[idx]] * exp)
        out.append(tuple(roots))
    return out


def _partition_monomials(rs, coords):
    """Exponent-pair monomials ((root_index, exp), ...) summing to coords."""
    roots = rs.positive_roots
    results = []

    def rec(idx, remaining, acc):
        if all(c == 0 for c in remaining):
            results.append(tuple(reversed(acc)))
            return
        if idx < 0:
            return
        rc = roots[idx].simple_coords
        max_e = min(
            (remaining[k] // rc[k] for k in range(rs.rank) if rc[k]), default=0
        )
        for e in range(max_e, -1, -1):
            rem = tuple(remaining[k] - e * rc[k] for k in range(rs.rank))
            if any(v < 0 for v in rem):
                continue
            rec(idx - 1, rem, acc + [(idx, e)] if e else acc)

    rec(len(roots) - 1, coords, [])
    # deterministic order: lexicographic in the dense exponent vectors
    results.sort(key=lambda mono: _dense_exponents(rs, mono))
    return results


def _dense_exponents(rs, mono):
    dense = [0] * len(rs.positive_roots)
    for idx, exp in mono:
        dense[idx] = exp
    return tuple(dense)


class _Verma:
    """Transient straightening engine for M(lambda) on PBW monomials."""

    def __init__(self, rs, lam):
        self.rs = rs
        self.lam = lam
        self._apply_memo = {}
        self._shap_memo = {}

    def mono_weight(self, mono):
        w = self.lam
        for idx, exp in mono:
            for _ in range(exp):
                w = wsub(w, self.rs.positive_roots[idx].weight_coords)
        return w

    def apply(self, signed, mono):
        """x_signed . (mono v+) as a dict {monomial: integer coefficient}."""
        key = (signed, mono)
        hit = self._apply_memo.get(key)
        if hit is not None:
            return hit
        rs = self.rs
        if signed < 0:
            g = -signed - 1
            if not mono or g <= mono[0][0]:
                if mono and g == mono[0][0]:
                    out = {((g, mono[0][1] + 1),) + mono[1:]: 1}
                else:
                    out = {((g, 1),) + mono: 1}
                self._apply_memo[key] = out
                return out
            k0, e0 = mono[0]
            tail = mono[1:] if e0 == 1 else ((k0, e0 - 1),) + mono[1:]
            out = self._lmul(k0, self.apply(signed, tail))
            n = rs.n_coeff(signed, -(k0 + 1))
            if n:
                s = rs._signed_index(
                    tuple(-a - b for a, b in zip(rs.positive_roots[g].simple_coords,
                                                 rs.positive_roots[k0].simple_coords))
                )
                _accumulate(out, self.apply(s, tail), n)
        else:
            if not mono:
                out = {}
                self._apply_memo[key] = out
                return out
            g = signed - 1
            k0, e0 = mono[0]
            tail = mono[1:] if e0 == 1 else ((k0, e0 - 1),) + mono[1:]
            out = self._lmul(k0, self.apply(signed, tail))
            if g == k0:
                # [e_g, f_g] = h_g acting on tail by <wt(tail), gamma_vee>
                gamma = rs.positive_roots[g]
                scal = pairing(rs, self.mono_weight(tail), gamma)
                if scal:
                    _accumulate(out, {tail: 1}, scal)
            else:
                n = rs.n_coeff(signed, -(k0 + 1))
                if n:
                    s = rs._signed_index(
                        tuple(a - b for a, b in zip(rs.positive_roots[g].simple_coords,
                                                    rs.positive_roots[k0].simple_coords))
                    )
                    _accumulate(out, self.apply(s, tail), n)
        self._apply_memo[key] = out
        return out

    def _lmul(self, k0, vec):
        out = {}
        neg = -(k0 + 1)
        for mono, coeff in vec.items():
            _accumulate(out, self.apply(neg, mono), coeff)
        return out

    def shapovalov(self, mi, mj):
        """<mi v+, mj v+> under the contravariant form, an exact integer."""
        if not mi:
            return 1 if not mj else 0
        key = (mi, mj)
        hit = self._shap_memo.get(key)
        if hit is not None:
            return hit
        k0, e0 = mi[0]
        tail = mi[1:] if e0 == 1 else ((k0, e0 - 1),) + mi[1:]
        total = 0
        for mono, coeff in self.apply(k0 + 1, mj).items():
            total += coeff * self.shapovalov(tail, mono)
        self._shap_memo[key] = total
        return total


def _accumulate(target, source, factor):
    for k, v in source.items():
        nv = target.get(k, 0) + factor * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


@dataclass(frozen=True)
class ModuleRealization:
    """Weight-graded exact matrices for all Chevalley generators on L(lambda).

    e_blocks[g] and f_blocks[g] (g a positive-root index) map each weight mu
    to the dense Fraction matrix of x_{gamma_g} resp. x_{-gamma_g} from the
    mu block into the mu +- gamma_g block. gram_blocks holds the restricted
    Shapovalov form; basis_monomials the pivot PBW monomials per weight.
    """

    rs: object
    highest_weight: tuple
    weights: tuple
    dims: dict
    basis_monomials: dict
    e_blocks: dict
    f_blocks: dict
    gram_blocks: dict

    @property
    def dimension(self):
        return sum(self.dims.values())

    def weight_offsets(self):
        """Deterministic global basis layout: weights in stored order."""
        offsets = {}
        pos = 0
        for w in self.weights:
            offsets[w] = pos
            pos += self.dims[w]
        return offsets, pos


def _weight_hull(rs, lam):
    simples = [r for r in rs.positive_roots if r.height == 1]
    members = {lam: 0}
    frontier = [lam]
    while frontier:
        nu = frontier.pop()
        for s in simples:
            mu = wsub(nu, s.weight_coords)
            if mu in members:
                continue
            mup = dominant_conjugate(rs, mu)
            diff = weight_to_root_coords(rs, wsub(lam, mup))
            if all(d.denominator == 1 and d >= 0 for d in diff):
                members[mu] = members[nu] + 1
                frontier.append(mu)
    return members


def construct_simple(rs, lam, cap=None):
    """Build L(lambda) as the Shapovalov quotient of the Verma module.

    Results are cached per (root system, weight, resolved cap): realizations
    are immutable by convention and freely shared, e.g. across the J-subsets
    of a verification sweep.
    """
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam):
        raise ValueError(f"{lam} is not dominant")
    return _construct_cached(rs, lam, resolve_dim_cap(cap))


@lru_cache(maxsize=None)
def _construct_cached(rs, lam, cap):
    total_dim = weyl_dimension(rs, frozenset(range(1, rs.rank + 1)), lam)
    if total_dim > cap:
        raise CapExceededError(
            f"dim L({lam}) = {total_dim} exceeds the cap {cap}; "
            f"raise it via the cap argument or ${ENV_DIM_CAP}"
        )

    verma = _Verma(rs, lam)
    hull = _weight_hull(rs, lam)
    order = tuple(sorted(hull, key=lambda w: (hull[w], w)))

    monos = {}
    mono_index = {}
    pivot_rows = {}  # rows of the full form at the pivot monomials
    basis = {}
    gram = {}
    gram_inv = {}
    for mu in order:
        depth = tuple(int(c) for c in weight_to_root_coords(rs, wsub(lam, mu)))
        mlist = _partition_monomials(rs, depth)
        monos[mu] = mlist
        mono_index[mu] = {m: i for i, m in enumerate(mlist)}
        smat = [[verma.shapovalov(mi, mj) for mj in mlist] for mi in mlist]
        _, pivots = bareiss_pivots(smat)
        assert pivots, f"empty weight space at {mu} inside the hull"
        basis[mu] = [mlist[c] for c in pivots]
        pivot_rows[mu] = [smat[r] for r in pivots]
        g = [[smat[r][c] for c in pivots] for r in pivots]
        gram[mu] = g
        gram_inv[mu] = invert_rational(g)

    def project(nu, vec):
        # coordinates of a Verma vector modulo the radical, on basis[nu]
        s = []
        idx = mono_index[nu]
        for row in pivot_rows[nu]:
            s.append(sum(row[idx[m]] * c for m, c in vec.items()))
        inv = gram_inv[nu]
        k = len(s)
        return [sum(inv[i][t] * s[t] for t in range(k)) for i in range(k)]

    e_blocks = {}
    f_blocks = {}
    for g_idx in range(len(rs.positive_roots)):
        gamma = rs.positive_roots[g_idx]
        for sign, store in ((1, e_blocks), (-1, f_blocks)):
            blocks = {}
            for mu in order:
                nu = wadd(mu, gamma.weight_coords) if sign > 0 else wsub(mu, gamma.weight_coords)
                if nu not in hull:
                    continue
                signed = (g_idx + 1) * sign
                cols = [project(nu, verma.apply(signed, b)) for b in basis[mu]]
                if all(all(v == 0 for v in col) for col in cols):
                    continue
                blocks[mu] = transpose(cols)
            store[g_idx] = blocks

    dims = {mu: len(basis[mu]) for mu in order}
    assert sum(dims.values()) == total_dim, "Shapovalov ranks disagree with the Weyl dimension"
    return ModuleRealization(
        rs=rs,
        highest_weight=lam,
        weights=order,
        dims=dims,
        basis_monomials=basis,
        e_blocks=e_blocks,
        f_blocks=f_blocks,
        gram_blocks=gram,
    )


# -- invariant checking ------------------------------------------------------


class _BlockOp:
    """A weight-homogeneous operator: blocks[mu] maps the mu block to mu+shift."""

    def __init__(self, shift, blocks):
        self.shift = shift
        self.blocks = blocks

    @classmethod
    def generator(cls, m, g_idx, sign):
        gamma = m.rs.positive_roots[g_idx]
        shift = gamma.weight_coords if sign > 0 else tuple(-c for c in gamma.weight_coords)
        return cls(shift, (m.e_blocks if sign > 0 else m.f_blocks).get(g_idx, {}))

    def compose(self, other, m):
        # self after other
        shift = wadd(self.shift, other.shift)
        blocks = {}
        for mu, b in other.blocks.items():
            mid = wadd(mu, other.shift)
            a = self.blocks.get(mid)
            if a is not None:
                prod = mat_mul(a, b)
                if not is_zero_matrix(prod):
                    blocks[mu] = prod
        return _BlockOp(shift, blocks)

    def sub(self, other):
        assert self.shift == other.shift
        blocks = dict(self.blocks)
        for mu, b in other.blocks.items():
            if mu in blocks:
                diff = mat_sub(blocks[mu], b)
                if is_zero_matrix(diff):
                    del blocks[mu]
                else:
                    blocks[mu] = diff
            else:
                blocks[mu] = mat_scale(-1, b)
        return _BlockOp(self.shift, blocks)

    def bracket(self, other, m):
        return self.compose(other, m).sub(other.compose(self, m))

    def is_zero(self):
        return all(is_zero_matrix(b) for b in self.blocks.values())

    def first_nonzero(self):
        for mu in sorted(self.blocks):
            if not is_zero_matrix(self.blocks[mu]):
                return mu, self.blocks[mu]
        return None

    def equals_scalar_by_weight(self, m, scalar_of_mu):
        """Compare against the operator acting on the mu block by scalar_of_mu(mu) * I."""
        for mu in m.weights:
            expected = scalar_of_mu(mu)
            got = self.blocks.get(mu)
            if got is None:
                if expected != 0:
                    return mu
            else:
                n = m.dims[mu]
                ident = identity(n)
                if not is_zero_matrix(mat_sub(got, mat_scale(expected, ident))):
                    return mu
        return None


@dataclass(frozen=True)
class ModuleReport:
    checks: tuple

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(name, detail) for name, ok, detail in self.checks if not ok]

    def __str__(self):
        lines = [f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {d}" if d and not ok else "")
                 for name, ok, d in self.checks]
        return "\n".join(lines)


def check_module(rs, m):
    """Verify every ModuleRealization invariant; returns a per-check report."""
    checks = []
    npos = len(rs.positive_roots)

    def record(name, ok, detail=""):
        checks.append((name, bool(ok), detail))

    # dimension bookkeeping against the two independent character routes
    full = frozenset(range(1, rs.rank + 1))
    ch = simple_character(rs, full, m.highest_weight)
    record(
        "total dimension matches Weyl dimension formula",
        m.dimension == weyl_dimension(rs, full, m.highest_weight),
        f"dim {m.dimension}",
    )
    record(
        "per-weight dimensions match the Freudenthal character",
        dict(m.dims) == dict(ch.terms),
        "",
    )
    record("highest weight space is a line", m.dims.get(m.highest_weight) == 1, "")

    es = [_BlockOp.generator(m, g, +1) for g in range(npos)]
    fs = [_BlockOp.generator(m, g, -1) for g in range(npos)]

    # [e_a, f_b] = delta_ab h_a + N(a,-b) x_{a-b}
    ok = True
    detail = ""
    for a in range(npos):
        for b in range(npos):
            br = es[a].bracket(fs[b], m)
            if a == b:
                gamma = rs.positive_roots[a]
                bad = br.equals_scalar_by_weight(m, lambda mu: pairing(rs, mu, gamma))
                if bad is not None:
                    ok, detail = False, f"[e_{a}, f_{a}] != h at weight {bad}"
            else:
                diff = tuple(
                    x - y
                    for x, y in zip(
                        rs.positive_roots[a].simple_coords, rs.positive_roots[b].simple_coords
                    )
                )
                n = rs.n_coeff(a + 1, -(b + 1))
                if n:
                    s = rs._signed_index(diff)
                    target = es[s - 1] if s > 0 else fs[-s - 1]
                    resid = br.sub(_BlockOp(target.shift, {k: mat_scale(n, v) for k, v in target.blocks.items()}))
                else:
                    resid = br
                if not resid.is_zero():
                    ok, detail = False, f"[e_{a}, f_{b}] has wrong value"
            if not ok:
                break
        if not ok:
            break
    record("mixed commutators [e,f] (including [e_i,f_j] = delta h_i)", ok, detail)

    # Chevalley compatibility on both triangular sides
    ok = True
    detail = ""
    for ops, side in ((es, +1), (fs, -1)):
        for a in range(npos):
            for b in range(a + 1, npos):
                br = ops[a].bracket(ops[b], m)
                ssum = tuple(
                    x + y
                    for x, y in zip(
                        rs.positive_roots[a].simple_coords, rs.positive_roots[b].simple_coords
                    )
                )
                if rs._is_root_coords(ssum):
                    c_idx = rs._signed_index(ssum) - 1
                    n = rs.n_coeff(side * (a + 1), side * (b + 1))
                    resid = br.sub(
                        _BlockOp(
                            ops[c_idx].shift,
                            {k: mat_scale(n, v) for k, v in ops[c_idx].blocks.items()},
                        )
                    )
                else:
                    resid = br
                if not resid.is_zero():
                    ok = False
                    detail = f"[x_{side*(a+1)}, x_{side*(b+1)}] fails Chevalley compatibility"
                    break
            if not ok:
                break
        if not ok:
            break
    record("Chevalley compatibility [x_a, x_b] = N x_{a+b}", ok, detail)

    # Serre relations on the simple generators
    ok = True
    detail = ""
    simple_idx = [next(g for g in range(npos) if rs.positive_roots[g].height == 1
                       and rs.positive_roots[g].simple_coords[i] == 1) for i in range(rs.rank)]
    for i in range(rs.rank):
        for j in range(rs.rank):
            if i == j:
                continue
            power = 1 - rs.cartan[i][j]
            for ops in (es, fs):
                x = ops[simple_idx[j]]
                for _ in range(power):
                    x = ops[simple_idx[i]].bracket(x, m)
                if not x.is_zero():
                    ok, detail = False, f"Serre relation fails for (i,j)=({i+1},{j+1})"
    record("Serre relations", ok, detail)

    # contravariance: E^T G_nu = G_mu F on every block
    ok = True
    detail = ""
    for g in range(npos):
        gamma = rs.positive_roots[g]
        for mu, eb in m.e_blocks.get(g, {}).items():
            nu = wadd(mu, gamma.weight_coords)
            fb = m.f_blocks.get(g, {}).get(nu)
            left = mat_mul(transpose(eb), m.gram_blocks[nu])
            right = mat_mul(m.gram_blocks[mu], fb) if fb is not None else zeros(m.dims[mu], m.dims[nu])
            if not is_zero_matrix(mat_sub(left, right)):
                ok, detail = False, f"contravariance fails for root {g} at weight {mu}"
                break
        if not ok:
            break
    record("contravariance (e and f adjoint for the Shapovalov form)", ok, detail)

    return ModuleReport(checks=tuple(checks))


def realization_to_json(m):
    """Binary-free JSON dump with rational entries as "p/q" strings."""

    def fr(x):
        f = Fraction(x)
        return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)

    def blocks_obj(blocks):
        out = []
        for g, per_weight in sorted(blocks.items()):
            for mu, mat in sorted(per_weight.items()):
                entries = [
                    [r, c, fr(v)]
                    for r, row in enumerate(mat)
                    for c, v in enumerate(row)
                    if v != 0
                ]
                out.append({"root": g, "from_weight": list(mu), "entries": entries})
        return out

    return {
        "schema": "v1",
        "type": f"{m.rs.type_label}{m.rs.rank}",
        "highest_weight": list(m.highest_weight),
        "dimension": m.dimension,
        "weights": [{"weight": list(w), "dim": m.dims[w]} for w in m.weights],
        "e_action": blocks_obj(m.e_blocks),
        "f_action": blocks_obj(m.f_blocks),
    }
