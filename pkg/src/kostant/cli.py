"""Command-line front end: predict, verify, sweep, alcove.

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 resource-cap error. All JSON records carry "schema": "v1".
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .affinelinkage import polo_tilouine_regime
from .errors import CapExceededError, InvariantError
from .kostantcalc import predict, verify
from .rootdata import parse_subset, parse_type, parse_weight

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    type_label: str
    rank: int
    J: tuple = None
    weight: tuple = None
    l: int = None
    fmt: str = "text"
    max_coord: int = None
    max_dim: int = None
    jobs: int = 1
    corrupt: tuple = None

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        for key in ("J", "weight", "corrupt"):
            if d.get(key) is not None:
                d[key] = tuple(d[key])
        return cls(**d)


def _build_config(args):
    rs = parse_type(args.type)
    J = None
    if getattr(args, "J", None) is not None:
        J = tuple(sorted(parse_subset(rs, args.J)))
    weight = None
    if getattr(args, "weight", None) is not None:
        weight = parse_weight(rs, args.weight)
    corrupt = None
    if getattr(args, "corrupt", None):
        parts = args.corrupt.split(",")
        if len(parts) != 2:
            raise ValueError("--corrupt expects two comma-separated positive-root indices")
        corrupt = (int(parts[0]), int(parts[1]))
    l = getattr(args, "l", None)
    cfg = RunConfig(
        command=args.cmd,
        type_label=rs.type_label,
        rank=rs.rank,
        J=J,
        weight=weight,
        l=int(l) if l is not None else None,
        fmt=args.format,
        max_coord=getattr(args, "max_coord", None),
        max_dim=getattr(args, "max_dim", None),
        jobs=getattr(args, "jobs", 1),
        corrupt=corrupt,
    )
    assert RunConfig.from_dict(cfg.to_dict()) == cfg
    return rs, cfg


def _emit(text):
    sys.stdout.write(text + "\n")


def cmd_predict(rs, cfg):
    p = predict(rs, cfg.J, cfg.weight)
    if cfg.fmt == "json":
        _emit(json.dumps({"schema": "v1", "prediction": p.to_obj()}, sort_keys=True))
        return EXIT_OK
    for n in p.degrees():
        weights = ", ".join(str(w) for w, _ in p.entries[n])
        _emit(f"degree {n}: {weights}")
    return EXIT_OK


def cmd_verify(rs, cfg):
    res = verify(rs, cfg.J, cfg.weight, dim_cap=cfg.max_dim, _flip_sign_pair=cfg.corrupt)
    if cfg.fmt == "json":
        _emit(json.dumps(res.to_obj(), sort_keys=True))
    else:
        _emit(f"type {cfg.type_label}{cfg.rank}  J={list(cfg.J)}  weight={list(cfg.weight)}")
        _emit(f"per-degree match: {list(res.per_degree_match)}")
        _emit(f"euler identity:   {'ok' if res.euler_ok else 'FAIL'}")
        _emit(f"linkage bound:    {'ok' if res.linkage_bound_ok else 'FAIL'}")
        _emit(f"multiplicity one: {'ok' if res.multiplicity_one_ok else 'FAIL'}")
        if res.decomposition_error:
            _emit(f"levi decomposition failed: {res.decomposition_error}")
        for degree, expected, got in res.mismatches():
            _emit(f"  degree {degree}: expected {expected}, oracle {got}")
        _emit(f"{'PASS' if res.passed else 'FAIL'} ({res.elapsed_ms} ms)")
    return EXIT_OK if res.passed else EXIT_VERIFICATION_FAILED


def _sweep_instances(rs, cfg):
    if cfg.J is not None:
        subsets = [cfg.J]
    else:
        idx = list(range(1, rs.rank + 1))
        subsets = [
            tuple(s) for k in range(rs.rank + 1) for s in itertools.combinations(idx, k)
        ]
    weights = sorted(itertools.product(range(cfg.max_coord + 1), repeat=rs.rank))
    return subsets, weights


def _sweep_one_weight(task):
    label, lam, subsets, max_dim, l = task
    rs = parse_type(label)
    rows = []
    for J in subsets:
        res = verify(rs, J, lam, dim_cap=max_dim)
        row = {
            "J": list(J),
            "weight": list(lam),
            "passed": res.passed,
            "degree_dims": [ch.dimension() for ch in res.oracle_characters],
            "elapsed_ms": res.elapsed_ms,
        }
        if l is not None:
            row["regime"] = polo_tilouine_regime(rs, l, lam).verdict
        rows.append(row)
    return rows


def cmd_sweep(rs, cfg):
    subsets, weights = _sweep_instances(rs, cfg)
    tasks = [
        (f"{rs.type_label}{rs.rank}", lam, subsets, cfg.max_dim, cfg.l) for lam in weights
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_sweep_one_weight, tasks))
    else:
        chunks = [_sweep_one_weight(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (len(r["J"]), r["J"], r["weight"]))
    all_ok = all(r["passed"] for r in rows)
    if cfg.fmt == "json":
        _emit(
            json.dumps(
                {"schema": "v1", "instances": rows, "all_passed": all_ok}, sort_keys=True
            )
        )
    else:
        for r in rows:
            regime = f"  regime={r['regime']}" if "regime" in r else ""
            _emit(
                f"J={r['J']!s:<12} weight={r['weight']!s:<16} dims={r['degree_dims']!s:<24} "
                f"{'PASS' if r['passed'] else 'FAIL'}{regime}"
            )
        _emit(f"{sum(r['passed'] for r in rows)}/{len(rows)} instances passed")
    return EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED


def cmd_alcove(rs, cfg):
    cert = polo_tilouine_regime(rs, cfg.l, cfg.weight)
    if cfg.fmt == "json":
        _emit(json.dumps(cert.to_obj(), sort_keys=True))
    else:
        obj = cert.to_obj()
        _emit(f"type {obj['type']}  l={obj['l']}  h={obj['h']}  weight={obj['weight']}")
        _emit(f"l admissible:     {obj['l_admissible']}" + (f" ({obj['reason']})" if obj["reason"] else ""))
        _emit(f"l >= h-1:         {obj['l_ge_h_minus_1']}")
        _emit(f"in lowest alcove: {obj['in_lowest_alcove']}")
        _emit(f"verdict: {obj['verdict']}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="kostant",
        description="Exact nilradical cohomology: predictions, oracle verification, alcove regimes.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, need_weight=True, need_j=True):
        p.add_argument("--type", required=True, help="root system label, e.g. A2, B2, G2")
        if need_j:
            p.add_argument("--J", required=True, help="comma-separated 1-based simple indices; '' for the empty set")
        if need_weight:
            p.add_argument("--weight", required=True, help="comma-separated fundamental-weight coordinates")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("predict", help="list the expected Levi summands per degree")
    common(p)

    p = sub.add_parser("verify", help="run the cohomology oracle against the prediction")
    common(p)
    p.add_argument("--max-dim", type=int, default=None, help="override the module dimension cap")
    p.add_argument("--corrupt", default=None, help="debug: flip the bracket sign of one nilradical root pair, e.g. '0,1'")

    p = sub.add_parser("sweep", help="verify all J and all small dominant weights")
    p.add_argument("--type", required=True)
    p.add_argument("--J", default=None, help="restrict to one subset (default: all subsets)")
    p.add_argument("--max-coord", type=int, required=True, help="bound on the weight coordinates")
    p.add_argument("--l", type=int, default=None, help="also report the root-of-unity regime verdict")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("alcove", help="root-of-unity regime certificate")
    common(p, need_j=False)
    p.add_argument("--l", type=int, required=True)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rs, cfg = _build_config(args)
        handler = {
            "predict": cmd_predict,
            "verify": cmd_verify,
            "sweep": cmd_sweep,
            "alcove": cmd_alcove,
        }[cfg.command]
        return handler(rs, cfg)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CapExceededError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except InvariantError as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
