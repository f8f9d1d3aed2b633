"""The cohomology formula as a computation, and the oracle-backed verifier.

predict() lists the expected Levi highest weights per degree: w . lambda for
w among the minimal coset representatives, in degree l(w), each with
multiplicity one. verify() runs the module construction and the cochain
oracle, decomposes each degree, and compares against the prediction, also
checking the Euler identity, the linkage bound and multiplicity freeness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cecohomology import build_complex, cohomology, cohomology_levi
from .charring import FormalCharacter, euler_characteristic
from .errors import DecompositionError, InvariantError
from .repmodel import construct_simple
from .rootdata import check_subset, check_weight, is_dominant
from .weylgroup import dot_act, min_coset_reps


@dataclass(frozen=True)
class KostantPrediction:
    source: tuple  # (type label, sorted J, lambda)
    entries: dict  # degree -> tuple of (weight, multiplicity-one)

    def degrees(self):
        return sorted(self.entries)

    def weights_in_degree(self, n):
        return [w for w, _ in self.entries.get(n, ())]

    def all_weights(self):
        return [w for n in self.degrees() for w, _ in self.entries[n]]

    def to_obj(self):
        return {
            str(n): [{"weight": list(w), "mult": m} for w, m in self.entries[n]]
            for n in self.degrees()
        }


def predict(rs, J, lam):
    """Expected cohomology: degree l(w) carries w . lambda once, w in JW."""
    J = check_subset(rs, J)
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam):
        raise ValueError(f"{lam} is not dominant")
    entries = {}
    seen = set()
    for w in min_coset_reps(rs, J):
        mu = dot_act(rs, w, lam)
        if not is_dominant(rs, mu, J):
            raise InvariantError(
                f"coset representative {w} gives non-J-dominant weight {mu}"
            )
        if mu in seen:
            raise InvariantError(f"weight {mu} appears twice in the dot orbit slice")
        seen.add(mu)
        entries.setdefault(w.length, []).append((mu, 1))
    entries = {n: tuple(sorted(v)) for n, v in entries.items()}
    return KostantPrediction(
        source=(f"{rs.type_label}{rs.rank}", tuple(sorted(J)), lam), entries=entries
    )


def linkage_ok(rs, J, lam, nu):
    """Whether nu lies in the ^JW dot-orbit slice of lam."""
    J = check_subset(rs, J)
    lam = check_weight(rs, lam)
    if not is_dominant(rs, lam):
        raise ValueError(f"{lam} is not dominant")
    nu = check_weight(rs, nu)
    return any(dot_act(rs, w, lam) == nu for w in min_coset_reps(rs, J))


@dataclass(frozen=True)
class VerifyResult:
    rs: object
    J: tuple
    lam: tuple
    prediction: KostantPrediction
    oracle_characters: tuple  # FormalCharacter per degree
    oracle_levi: tuple  # LeviDecomposition per degree, or None on failure
    per_degree_match: tuple
    euler_ok: bool
    linkage_bound_ok: bool
    multiplicity_one_ok: bool
    decomposition_error: str
    elapsed_ms: int

    @property
    def passed(self):
        return (
            not self.decomposition_error
            and all(self.per_degree_match)
            and self.euler_ok
            and self.linkage_bound_ok
            and self.multiplicity_one_ok
        )

    def mismatches(self):
        """(degree, predicted, observed) triples where the comparison failed."""
        out = []
        if self.oracle_levi is None:
            return out
        for n, ok in enumerate(self.per_degree_match):
            if not ok:
                out.append(
                    (
                        n,
                        self.prediction.entries.get(n, ()),
                        self.oracle_levi[n].summands,
                    )
                )
        return out

    def to_obj(self):
        return {
            "schema": "v1",
            "input": {
                "type": f"{self.rs.type_label}{self.rs.rank}",
                "J": list(self.J),
                "weight": list(self.lam),
            },
            "prediction": self.prediction.to_obj(),
            "oracle": [
                dec.to_obj() if dec is not None else None
                for dec in (self.oracle_levi or ())
            ]
            if self.oracle_levi is not None
            else None,
            "per_degree_match": list(self.per_degree_match),
            "euler_ok": self.euler_ok,
            "linkage_ok": self.linkage_bound_ok,
            "multiplicity_one_ok": self.multiplicity_one_ok,
            "decomposition_error": self.decomposition_error or None,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }


def verify(rs, J, lam, dim_cap=None, _flip_sign_pair=None):
    """Full pipeline: construct L(lam), run the oracle, compare with predict."""
    J = check_subset(rs, J)
    lam = check_weight(rs, lam)
    t0 = time.perf_counter()
    prediction = predict(rs, J, lam)
    module = construct_simple(rs, lam, cap=dim_cap)
    cx = build_complex(rs, J, module, dim_cap=dim_cap, _flip_sign_pair=_flip_sign_pair)
    chars = cohomology(cx)
    top = cx.top_degree

    decomposition_error = ""
    levi = None
    try:
        levi = tuple(cohomology_levi(rs, J, chars))
    except DecompositionError as exc:
        decomposition_error = str(exc)

    per_degree = []
    linkage_bound = True
    mult_one = True
    if levi is not None:
        orbit = set(prediction.all_weights())
        seen = set()
        for n in range(top + 1):
            expected = prediction.entries.get(n, ())
            per_degree.append(tuple(sorted(levi[n].summands)) == expected)
            for w, m in levi[n].summands:
                if w not in orbit:
                    linkage_bound = False
                if m != 1 or w in seen:
                    mult_one = False
                seen.add(w)
    else:
        per_degree = [False] * (top + 1)
        linkage_bound = mult_one = False

    alternating = FormalCharacter()
    for n, ch in enumerate(chars):
        alternating = alternating + ch if n % 2 == 0 else alternating - ch
    euler_ok = alternating == euler_characteristic(rs, J, lam)

    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerifyResult(
        rs=rs,
        J=tuple(sorted(J)),
        lam=lam,
        prediction=prediction,
        oracle_characters=tuple(chars),
        oracle_levi=levi,
        per_degree_match=tuple(per_degree),
        euler_ok=euler_ok,
        linkage_bound_ok=linkage_bound,
        multiplicity_one_ok=mult_one,
        decomposition_error=decomposition_error,
        elapsed_ms=elapsed,
    )
