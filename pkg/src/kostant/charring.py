"""Formal characters and the character-level identities.

A FormalCharacter is a finite sparse map weight -> integer multiplicity in
the group ring Z[X]. Simple characters (for the full algebra or for a Levi
subalgebra) are computed by Freudenthal's multiplicity recursion, run
directly in the ambient weight lattice: for a subset J the recursion uses
the roots of Phi_J only, and using the full rho instead of rho_J changes
nothing because rho - rho_J is orthogonal to the span of J.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DecompositionError
from .rootdata import (
    check_subset,
    check_weight,
    dominant_conjugate,
    is_dominant,
    levi_positive_roots,
    nilradical_roots,
    pairing,
    rho,
    wadd,
    weight_to_root_coords,
    wsub,
)


class FormalCharacter:
    """Finite integer combination of formal exponentials e^mu."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: m for w, m in (terms or {}).items() if m != 0}

    @classmethod
    def exponential(cls, weight, mult=1):
        return cls({tuple(weight): mult})

    def multiplicity(self, weight):
        return self.terms.get(tuple(weight), 0)

    def dimension(self):
        return sum(self.terms.values())

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) + m
        return FormalCharacter(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) - m
        return FormalCharacter(out)

    def __neg__(self):
        return FormalCharacter({w: -m for w, m in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalCharacter({w: other * m for w, m in self.terms.items()})
        out = {}
        for w1, m1 in self.terms.items():
            for w2, m2 in other.terms.items():
                key = wadd(w1, w2)
                out[key] = out.get(key, 0) + m1 * m2
        return FormalCharacter(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        parts = [f"{m}*e{list(w)}" for w, m in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"

    def to_obj(self):
        """JSON form: weight-lex-sorted list of {"weight": [...], "mult": n}."""
        return [{"weight": list(w), "mult": m} for w, m in sorted(self.terms.items())]

    @classmethod
    def from_obj(cls, obj):
        return cls({tuple(entry["weight"]): int(entry["mult"]) for entry in obj})


def is_wj_invariant(rs, J, chi):
    """Whether every J-simple reflection permutes the terms of chi."""
    from .weylgroup import act, simple_reflection

    for j in check_subset(rs, J):
        s = simple_reflection(rs, j)
        moved = {act(rs, s, w): m for w, m in chi.terms.items()}
        if moved != chi.terms:
            return False
    return True


@lru_cache(maxsize=None)
def _simple_character_cached(rs, J, lam):
    levi = levi_positive_roots(rs, J)
    jlist = sorted(J)
    simples = {
        j: next(r for r in rs.positive_roots if r.height == 1 and r.simple_coords[j - 1] == 1)
        for j in jlist
    }

    def member(mu):
        # mu lies in wt L_J(lam) iff its J-dominant conjugate is <= lam on J
        mup = dominant_conjugate(rs, mu, J=jlist)
        diff = weight_to_root_coords(rs, wsub(lam, mup))
        if any(d.denominator != 1 for d in diff):
            return False
        if any(d != 0 for k, d in enumerate(diff) if (k + 1) not in J):
            return False
        return all(d >= 0 for d in diff)

    weights = {lam: 0}  # weight -> height of lam - weight
    frontier = [lam]
    while frontier:
        nu = frontier.pop()
        for j in jlist:
            mu = wsub(nu, simples[j].weight_coords)
            if mu in weights:
                continue
            if member(mu):
                weights[mu] = weights[nu] + 1
                frontier.append(mu)

    def root_inner(nu, gamma):
        # (nu, gamma) = <nu, gamma_vee> * |gamma|^2 / 2, an exact integer here
        return pairing(rs, nu, gamma) * gamma.norm_sq // 2

    mult = {lam: 1}
    for mu in sorted(weights, key=lambda w: (weights[w], w)):
        if mu == lam:
            continue
        # denom = 2 (lambda + mu + 2 rho, lambda - mu)
        #       = 2 [ (lam+rho, lam+rho) - (mu+rho, mu+rho) ], an exact integer
        diff = weight_to_root_coords(rs, wsub(lam, mu))
        denom = sum(
            int(diff[j]) * (lam[j] + mu[j] + 2) * rs.simple_norms[j] for j in range(rs.rank)
        )
        assert denom > 0
        total = 0
        for gamma in levi:
            k = 1
            while True:
                nu = wadd(mu, tuple(k * c for c in gamma.weight_coords))
                if nu not in weights:
                    break  # root strings through the support are unbroken
                total += root_inner(nu, gamma) * mult[nu]
                k += 1
        val = Fraction(4 * total, denom)
        assert val.denominator == 1
        mult[mu] = int(val)
    return FormalCharacter(mult)


def simple_character(rs, J, lam):
    """Character of the simple module L_J(lam) by Freudenthal's recursion.

    For J = Delta this is ch L(lam). The weight lam must be J-dominant; the
    module is finite dimensional because only Phi_J acts.
    """
    J = check_subset(rs, J)
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam, J):
        raise ValueError(f"{lam} is not J-dominant for J={sorted(J)}")
    return _simple_character_cached(rs, J, lam)


def weyl_dimension(rs, J, lam):
    """Product formula for dim L_J(lam); cross-checks the Freudenthal route."""
    J = check_subset(rs, J)
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam, J):
        raise ValueError(f"{lam} is not J-dominant for J={sorted(J)}")
    num = den = 1
    lam_rho = wadd(lam, rho(rs))
    for gamma in levi_positive_roots(rs, J):
        num *= pairing(rs, lam_rho, gamma)
        den *= pairing(rs, rho(rs), gamma)
    val = Fraction(num, den)
    assert val.denominator == 1 and val > 0
    return int(val)


def exterior_character(rs, J, n):
    """Character of the n-th exterior power of the dual nilradical.

    Terms are e^{-sum(S)} over n-subsets S of the nilradical roots, so the
    total dimension is C(N, n).
    """
    nil = nilradical_roots(rs, J)
    if not 0 <= n <= len(nil):
        raise ValueError(f"exterior degree {n} out of range 0..{len(nil)}")
    out = {}
    for subset in itertools.combinations(nil, n):
        total = (0,) * rs.rank
        for r in subset:
            total = wsub(total, r.weight_coords)
        out[total] = out.get(total, 0) + 1
    return FormalCharacter(out)


def euler_characteristic(rs, J, lam):
    """Alternating sum over exterior degrees of ch Lambda^n(u*) . ch L(lam)."""
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam):
        raise ValueError(f"{lam} is not dominant")
    full = frozenset(range(1, rs.rank + 1))
    chl = simple_character(rs, full, lam)
    nil_count = len(nilradical_roots(rs, J))
    out = FormalCharacter()
    for n in range(nil_count + 1):
        term = exterior_character(rs, J, n) * chl
        out = out + term if n % 2 == 0 else out - term
    return out


@dataclass(frozen=True)
class LeviDecomposition:
    """Multiset of J-dominant highest weights with multiplicities."""

    summands: tuple

    def multiplicity(self, weight):
        for w, m in self.summands:
            if w == tuple(weight):
                return m
        return 0

    def total_multiplicity(self):
        return sum(m for _, m in self.summands)

    def to_obj(self):
        return [{"weight": list(w), "mult": m} for w, m in self.summands]

    def to_character(self, rs, J):
        out = FormalCharacter()
        for w, m in self.summands:
            out = out + simple_character(rs, J, w) * m
        return out


def decompose_levi(rs, J, chi):
    """Greedy peeling of a W_J-invariant character into Levi simple characters.

    Repeatedly removes the J-dominant weight of maximal height (ties broken
    lexicographically) with its full multiplicity. Raises DecompositionError
    if any step would need a negative multiplicity: the character is not a
    nonnegative sum of Levi simples.
    """
    J = check_subset(rs, J)
    residual = dict(chi.terms)
    found = []
    while residual:
        best = None
        best_key = None
        for w in residual:
            if not is_dominant(rs, w, J):
                continue
            key = (sum(weight_to_root_coords(rs, w)), w)
            if best_key is None or key > best_key:
                best, best_key = w, key
        if best is None:
            raise DecompositionError(
                f"residual character {sorted(residual.items())} has no J-dominant weight; "
                "not a nonnegative sum of Levi simples"
            )
        m = residual[best]
        if m < 0:
            raise DecompositionError(
                f"weight {best} would need multiplicity {m} < 0; "
                "not a nonnegative sum of Levi simples"
            )
        found.append((best, m))
        for w, c in _simple_character_cached(rs, J, best).terms.items():
            nv = residual.get(w, 0) - m * c
            if nv:
                residual[w] = nv
            else:
                residual.pop(w, None)
    return LeviDecomposition(summands=tuple(sorted(found)))
