"""Command-line interface.

    incompress chi --ambient 3 --degrees 4
    incompress tau 4
    incompress charnum --ambient 2 --degrees 2 --partition 1
    incompress report --ambient 2 --degrees 2 --nx 2 --format json
    incompress degform --chi-y 0 --dim-y 1 --chi-x 1 --deg-f 1 --nx 3
    incompress sweep

Exit codes: 0 success, 2 invalid input, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from .arith import todd_number
from .checks import SweepConfig, run_all
from .criteria import (
    CriterionVerdict,
    IncompressibilityReport,
    MapHypothesis,
    PrimeData,
    Verdict,
    build_report,
    dfr_congruence_holds,
)
from .errors import InternalInconsistency, InvalidOperand
from .symfun import Partition
from .variety import (
    CharNumberTable,
    CompleteIntersection,
    char_number,
    euler_char_residue,
    euler_char_via_charnumbers,
)

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 2, 3


@dataclass
class CliConfig:
    output_format: str = "text"
    max_dim: int = 5
    max_degree: int = 5
    max_m: int = 3

    def __post_init__(self):
        if self.output_format not in ("text", "json"):
            raise InvalidOperand(f"unknown format {self.output_format!r}")
        if min(self.max_dim, self.max_degree) < 1 or self.max_m < 0:
            raise InvalidOperand("sweep bounds must be positive")


# --- serialization -----------------------------------------------------------


def _num(x):
    """Integers become decimal strings; None and bools pass through."""
    if x is None or isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x)
    return x


def _opt_int(s):
    return None if s is None else int(s)


def envelope(command: str, inputs: dict, results: dict, verdicts: dict) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "verdicts": verdicts}


def _variety_inputs(X: CompleteIntersection) -> dict:
    return {
        "ambient": _num(X.ambient_dim),
        "degrees": [_num(d) for d in X.degrees],
        "nx": _num(X.n_x),
        "nx_is_default": X.point_index is None,
    }


def report_to_json(report: IncompressibilityReport) -> dict:
    X = report.variety
    results = {
        "dim": _num(X.dim),
        "chi": _num(report.chi),
        "chi_via_charnumbers": _num(report.chi_via_charnumbers),
        "tau_d": _num(report.tau_d),
        "tau_d_minus_1": _num(report.tau_d_minus_1),
        "sanity_i": report.sanity_i,
        "charnumbers": {str(a): _num(c) for a, c in report.charnumbers.entries.items()},
        "per_prime": {
            str(p): {
                "eta_p": _num(d.eta_p),
                "u_p": _num(d.u_p),
                "rost_fires": d.rost_verdict,
                "u_p_fires": d.u_p_verdict,
            }
            for p, d in report.per_prime.items()
        },
        "cond3": report.cond3,
    }
    verdicts = {
        "overall": report.overall.value,
        "corollary_ii_fires": report.corollary_ii_verdict,
        "myex_fires": report.myex_verdict,
        "criteria": [
            {
                "criterion": v.criterion,
                "verdict": v.verdict.value,
                "evidence": {k: _num(x) for k, x in v.evidence.items()},
            }
            for v in report.verdicts
        ],
    }
    return envelope("report", _variety_inputs(X), results, verdicts)


def _parse_partition_key(s: str) -> Partition:
    inner = s.strip("()")
    return Partition(int(a) for a in inner.split(",") if a)


def report_from_json(obj: dict) -> IncompressibilityReport:
    inp, res, ver = obj["inputs"], obj["results"], obj["verdicts"]
    X = CompleteIntersection(
        int(inp["ambient"]),
        tuple(int(d) for d in inp["degrees"]),
        None if inp["nx_is_default"] else int(inp["nx"]),
    )
    table = CharNumberTable(
        X, {_parse_partition_key(k): int(v) for k, v in res["charnumbers"].items()}
    )
    per_prime = {
        int(p): PrimeData(_opt_int(d["eta_p"]), int(d["u_p"]), d["rost_fires"], d["u_p_fires"])
        for p, d in res["per_prime"].items()
    }
    verdicts = tuple(
        CriterionVerdict(
            v["criterion"], Verdict(v["verdict"]), {k: int(x) for k, x in v["evidence"].items()}
        )
        for v in ver["criteria"]
    )
    return IncompressibilityReport(
        variety=X,
        chi=int(res["chi"]),
        chi_via_charnumbers=int(res["chi_via_charnumbers"]),
        tau_d=int(res["tau_d"]),
        tau_d_minus_1=int(res["tau_d_minus_1"]),
        charnumbers=table,
        per_prime=per_prime,
        sanity_i=res["sanity_i"],
        corollary_ii_verdict=ver["corollary_ii_fires"],
        myex_verdict=ver["myex_fires"],
        cond3=res["cond3"],
        verdicts=verdicts,
    )


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _flatten(obj: Any, prefix: str = ""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        if obj is None:
            text = "n/a"
        elif isinstance(obj, bool):
            text = "true" if obj else "false"
        else:
            text = str(obj)
        yield f"{prefix}: {text}"


def render_text(obj: dict) -> str:
    """One ``key: value`` line per leaf of the JSON document."""
    lines = [f"# {obj['command']}"]
    for section in ("inputs", "results", "verdicts"):
        if obj.get(section):
            lines.extend(_flatten(obj[section], section))
    return "\n".join(lines)


# --- commands ----------------------------------------------------------------


def _parse_ints(s: str | None, what: str) -> tuple[int, ...]:
    if s is None or s.strip() == "":
        return ()
    try:
        vals = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise InvalidOperand(f"{what} must be comma-separated integers, got {s!r}")
    if any(v < 1 for v in vals):
        raise InvalidOperand(f"{what} must be positive, got {s!r}")
    return vals


def _variety(args) -> CompleteIntersection:
    return CompleteIntersection(
        args.ambient, _parse_ints(args.degrees, "degrees"), getattr(args, "nx", None)
    )


def cmd_chi(args) -> dict:
    X = _variety(args)
    a, b = euler_char_residue(X), euler_char_via_charnumbers(X)
    if a != b:
        raise InternalInconsistency(f"chi routes disagree: {a} vs {b}")
    return envelope(
        "chi",
        {"ambient": _num(X.ambient_dim), "degrees": [_num(d) for d in X.degrees]},
        {"dim": _num(X.dim), "chi": _num(a), "chi_residue": _num(a),
         "chi_charnumbers": _num(b), "routes_agree": a == b},
        {},
    )


def cmd_tau(args) -> dict:
    if args.d < 0:
        raise InvalidOperand("d must be >= 0")
    return envelope("tau", {"d": _num(args.d)}, {"tau": _num(todd_number(args.d))}, {})


def cmd_charnum(args) -> dict:
    X = _variety(args)
    alpha = Partition(_parse_ints(args.partition, "partition"))
    c = char_number(X, alpha, verify=True)
    return envelope(
        "charnum",
        {"ambient": _num(X.ambient_dim), "degrees": [_num(d) for d in X.degrees],
         "partition": [_num(a) for a in alpha]},
        {"c_alpha": _num(c), "routes_agree": True},
        {},
    )


def cmd_report(args) -> dict:
    return report_to_json(build_report(_variety(args)))


def cmd_degform(args) -> dict:
    h = MapHypothesis(args.chi_y, args.dim_y, args.chi_x, args.nx, args.deg_f)
    tau = todd_number(h.dim_Y - 1)
    holds = dfr_congruence_holds(h)
    return envelope(
        "degform",
        {"chi_y": _num(h.chi_Y), "dim_y": _num(h.dim_Y), "chi_x": _num(h.chi_X),
         "deg_f": _num(h.deg_f), "nx": _num(h.n_X)},
        {"tau_dim_y_minus_1": _num(tau), "lhs": _num(h.chi_Y * tau),
         "rhs": _num(h.deg_f * h.chi_X * tau)},
        {"dfr": "holds" if holds else "violated"},
    )


def cmd_sweep(args) -> dict:
    cfg = SweepConfig(max_dim=args.max_dim, max_m=args.max_m, max_degree=args.max_degree)
    CliConfig(args.format or "text", args.max_dim, args.max_degree, args.max_m)
    results = run_all(cfg)
    checks = {
        r.name: {
            "passed": r.passed,
            "cases": _num(r.cases),
            "failures": _num(len(r.failures)),
            "first_failure": str(r.failures[0]) if r.failures else None,
        }
        for r in results
    }
    return envelope(
        "sweep",
        {"max_dim": _num(cfg.max_dim), "max_m": _num(cfg.max_m),
         "max_degree": _num(cfg.max_degree)},
        {"checks": checks},
        {"all_passed": all(r.passed for r in results)},
    )


def _sweep_table(obj: dict) -> str:
    lines = [f"{'check':45s} {'result':6s} {'cases':>7s} {'failed':>7s}"]
    for name, c in obj["results"]["checks"].items():
        lines.append(f"{name:45s} {'PASS' if c['passed'] else 'FAIL':6s} "
                     f"{c['cases']:>7s} {c['failures']:>7s}")
        if c["first_failure"]:
            lines.append(f"    first failure: {c['first_failure']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="incompress", description=__doc__.split("\n")[0], parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def variety_args(p, nx=False):
        p.add_argument("--ambient", type=int, required=True, help="n for P^n")
        p.add_argument("--degrees", default=None, help="comma-separated, e.g. 2,3")
        if nx:
            p.add_argument("--nx", type=int, default=None, help="point index n_X")

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic of O_X")
    variety_args(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("tau", parents=[common], help="Todd number tau_d")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("charnum", parents=[common], help="characteristic number c_alpha")
    variety_args(p)
    p.add_argument("--partition", required=True, help="comma-separated parts")
    p.set_defaults(func=cmd_charnum)

    p = sub.add_parser("report", parents=[common], help="incompressibility report")
    variety_args(p, nx=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("degform", parents=[common], help="check the degree-formula congruence")
    p.add_argument("--chi-y", type=int, required=True)
    p.add_argument("--dim-y", type=int, required=True)
    p.add_argument("--chi-x", type=int, required=True)
    p.add_argument("--deg-f", type=int, required=True)
    p.add_argument("--nx", type=int, required=True)
    p.set_defaults(func=cmd_degform)

    p = sub.add_parser("sweep", parents=[common], help="run the invariant sweeps")
    p.add_argument("--max-dim", type=int, default=5)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=5)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    args.format = fmt
    try:
        obj = args.func(args)
    except InvalidOperand as exc:
        print(f"incompress: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInconsistency as exc:
        print(f"incompress: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if fmt == "json":
        print(dumps(obj))
    elif obj["command"] == "sweep":
        print(_sweep_table(obj))
    else:
        print(render_text(obj))
    if obj["command"] == "sweep" and not obj["verdicts"]["all_passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
