"""Affine Weyl linkage, restricted weights, and lowest-alcove regime tests.

The affine group W_l = W x l ZPhi and its extension What_l = W x lX act
through the dot action; linkage is decided by |W| lattice-membership tests.
The closed lowest alcove is the predicate <lam + rho, alpha_vee> <= l with
alpha the highest short root; the closure convention is isolated here so it
can be switched in one place.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootdata import (
    check_subset,
    check_weight,
    coxeter_number,
    is_dominant,
    levi_components,
    levi_positive_roots,
    nilradical_roots,
    pairing,
    rho,
    wadd,
    weight_to_root_coords,
    wsub,
)
from .weylgroup import act, dot_act, enumerate_weyl, min_coset_reps


def admissibility(rs, l):
    """Whether l satisfies the standing parameter assumptions; (ok, reason)."""
    if l <= 1:
        return False, f"l = {l} must exceed 1"
    if l % 2 == 0:
        return False, f"l = {l} must be odd"
    if rs.type_label == "G" and l % 3 == 0:
        return False, f"3 divides l = {l}, excluded in type G2"
    return True, ""


@dataclass(frozen=True)
class UnityParams:
    """An admissible odd order l > 1 for a fixed root system."""

    rs: object
    l: int

    def __post_init__(self):
        ok, reason = admissibility(self.rs, self.l)
        if not ok:
            raise ValueError(reason)


def affine_linked(p, lam, mu, extended=False):
    """Whether mu lies in the dot orbit of lam under W_l (or What_l).

    Finite check: for some w in W, mu + rho - w(lam + rho) lies in l ZPhi
    (classical affine group) or in lX (extended=True).
    """
    rs = p.rs
    lam = check_weight(rs, lam)
    mu = check_weight(rs, mu)
    shifted = wadd(lam, rho(rs))
    target = wadd(mu, rho(rs))
    for w in enumerate_weyl(rs):
        diff = wsub(target, act(rs, w, shifted))
        if extended:
            if all(c % p.l == 0 for c in diff):
                return True
        else:
            coords = weight_to_root_coords(rs, diff)
            if all(c.denominator == 1 and int(c) % p.l == 0 for c in coords):
                return True
    return False


def restricted_decompose(p, mu):
    """Unique splitting mu = mu0 + l mu1 with mu0 l-restricted, mu1 dominant."""
    rs = p.rs
    mu = check_weight(rs, mu)
    if not is_dominant(rs, mu):
        raise ValueError(f"{mu} is not dominant; the restricted splitting needs X+")
    mu0 = tuple(c % p.l for c in mu)
    mu1 = tuple(c // p.l for c in mu)
    return mu0, mu1


def in_closed_lowest_alcove(p, lam):
    """lam in X+ with <lam + rho, alpha_vee> <= l, alpha the highest short root."""
    rs = p.rs
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam):
        return False
    return pairing(rs, wadd(lam, rho(rs)), rs.highest_short_root) <= p.l


def _component_short_high_roots(rs, J):
    """Per Dynkin component of J: the highest root of minimal squared length."""
    out = []
    for comp in levi_components(rs, J):
        comp_set = set(comp)
        roots = [
            r
            for r in levi_positive_roots(rs, J)
            if {k + 1 for k in range(rs.rank) if r.simple_coords[k]} <= comp_set
        ]
        short = min(r.norm_sq for r in roots)
        out.append(
            max((r for r in roots if r.norm_sq == short), key=lambda r: (r.height, r.simple_coords))
        )
    return out


def levi_in_lowest_alcove(rs, J, l, sigma):
    """The Levi analog of the alcove predicate, component by component."""
    if not is_dominant(rs, sigma, check_subset(rs, J)):
        return False
    shifted = wadd(sigma, rho(rs))
    return all(pairing(rs, shifted, beta) <= l for beta in _component_short_high_roots(rs, J))


@dataclass(frozen=True)
class RegimeCertificate:
    rs: object
    l: int
    weight: tuple
    l_admissible: bool
    admissibility_reason: str
    l_ge_h_minus_1: bool
    in_lowest_alcove: bool
    verdict: str  # rejected | formula-guaranteed | converse-regime | outside-guarantee

    def to_obj(self):
        return {
            "schema": "v1",
            "l": self.l,
            "type": f"{self.rs.type_label}{self.rs.rank}",
            "h": coxeter_number(self.rs),
            "weight": list(self.weight),
            "l_admissible": self.l_admissible,
            "reason": self.admissibility_reason or None,
            "l_ge_h_minus_1": self.l_ge_h_minus_1,
            "in_lowest_alcove": self.in_lowest_alcove,
            "verdict": self.verdict,
        }


def polo_tilouine_regime(rs, l, lam):
    """Certificate for when the specialized cohomology formula is guaranteed.

    formula-guaranteed: admissible l >= h-1 and lam in the closed lowest
    alcove. converse-regime: admissible l < h-1, where the trivial-coefficient
    characters provably differ from the generic answer. Anything else in
    between is outside-guarantee; inadmissible l is rejected outright.
    """
    lam = check_weight(rs, lam)
    ok, reason = admissibility(rs, l)
    h = coxeter_number(rs)
    if not ok:
        return RegimeCertificate(
            rs=rs,
            l=l,
            weight=lam,
            l_admissible=False,
            admissibility_reason=reason,
            l_ge_h_minus_1=l >= h - 1,
            in_lowest_alcove=False,
            verdict="rejected",
        )
    p = UnityParams(rs, l)
    ge = l >= h - 1
    inside = in_closed_lowest_alcove(p, lam)
    if not ge:
        verdict = "converse-regime"
    elif inside:
        verdict = "formula-guaranteed"
    else:
        verdict = "outside-guarantee"
    return RegimeCertificate(
        rs=rs,
        l=l,
        weight=lam,
        l_admissible=True,
        admissibility_reason="",
        l_ge_h_minus_1=ge,
        in_lowest_alcove=inside,
        verdict=verdict,
    )


@dataclass(frozen=True)
class AlcoveReport:
    checks: tuple

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def __str__(self):
        return "\n".join(
            f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {d}" if d and not ok else "")
            for name, ok, d in self.checks
        )


def bottom_alcove_weights_check(rs, J, l):
    """Exhaustive weight estimates behind the root-of-unity argument.

    (a) every weight of the exterior algebra of the dual nilradical that is
        affinely linked to 0 (i.e. of the form w.0 + l mu) is exactly w'.0;
    (b) each w.0 for w among the coset representatives lies in the closed
        lowest alcove of the Levi.
    Preconditions: l admissible and l >= h - 1.
    """
    J = check_subset(rs, J)
    ok, reason = admissibility(rs, l)
    if not ok:
        raise ValueError(reason)
    h = coxeter_number(rs)
    if l < h - 1:
        raise ValueError(f"l = {l} is below h - 1 = {h - 1}; the estimates need l >= h-1")

    nil = nilradical_roots(rs, J)
    zero = (0,) * rs.rank
    w_dot_zero = {dot_act(rs, w, zero) for w in enumerate_weyl(rs)}
    elems = enumerate_weyl(rs)

    checks = []
    bad = []
    examined = 0
    linked = 0
    for n in range(len(nil) + 1):
        for S in itertools.combinations(nil, n):
            sigma = zero
            for r in S:
                sigma = wsub(sigma, r.weight_coords)
            examined += 1
            is_linked = False
            for w in elems:
                diff = wsub(sigma, dot_act(rs, w, zero))
                if all(c % l == 0 for c in diff):
                    is_linked = True
                    break
            if not is_linked:
                continue
            linked += 1
            if sigma not in w_dot_zero:
                bad.append(sigma)
    checks.append(
        (
            f"linked exterior weights are dot-orbit weights ({linked}/{examined} linked)",
            not bad,
            f"violations: {bad[:3]}" if bad else "",
        )
    )

    bad = []
    for w in min_coset_reps(rs, J):
        sigma = dot_act(rs, w, zero)
        if not levi_in_lowest_alcove(rs, J, l, sigma):
            bad.append((str(w), sigma))
    checks.append(
        (
            "w.0 lies in the closed lowest Levi alcove for every representative",
            not bad,
            f"violations: {bad[:3]}" if bad else "",
        )
    )
    return AlcoveReport(checks=tuple(checks))
