"""Command-line front end.

Every subcommand takes its inputs from flags, writes one JSON document (or a
CSV table) to stdout, and reports errors as JSON on stderr.

Exit codes: 0 success, 1 an inequality came out Violated, 2 bad input,
3 a length or step budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import bennequin, dehornoy, fdtc, garside
from .decomposition import decompose, verify_decomposition
from .errors import BraidError, BudgetError, InputError
from .intervals import as_fraction, format_rational
from .words import (
    BraidWord,
    closure_components,
    format_word,
    is_pure,
    parse_word,
    underlying_permutation,
    writhe,
)

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _word(args, attr: str = "word") -> BraidWord:
    text = getattr(args, attr)
    if text is None:
        raise InputError(f"--{attr.replace('_', '-')} is required")
    return parse_word(text, args.n)


def _report(command: str, inputs: dict, results: dict, status: str = "ok") -> dict:
    return {"command": command, "inputs": inputs, "results": results, "status": status}


def cmd_eval(args) -> dict:
    u = _word(args)
    nf = garside.to_normal_form(u)
    results = {
        "writhe": writhe(u),
        "permutation": list(underlying_permutation(u).images),
        "components": closure_components(u),
        "pure": is_pure(u),
        "infimum": nf.infimum,
        "supremum": nf.supremum,
        "canonical_length": nf.canonical_length,
        "normal_form": nf.to_json(),
    }
    return _report("eval", {"n": args.n, "word": format_word(u)}, results)


def cmd_compare(args) -> dict:
    u, v = _word(args), _word(args, "word2")
    sign = dehornoy.compare(v, u)  # sign of v^-1 u: GT means word > word2
    return _report(
        "compare",
        {"n": args.n, "word": format_word(u), "word2": format_word(v)},
        {"order": str(sign)},
    )


def cmd_floor(args) -> dict:
    u = _word(args)
    return _report("floor", {"n": args.n, "word": format_word(u)}, {"floor": dehornoy.dehornoy_floor(u)})


def cmd_fdtc(args) -> dict:
    u = _word(args)
    if args.tol is not None:
        interval = fdtc.fdtc_estimate(u, as_fraction(args.tol))
        inputs = {"n": args.n, "word": format_word(u), "tol": format_rational(as_fraction(args.tol))}
    else:
        interval = fdtc.floor_interval(u, args.k)
        inputs = {"n": args.n, "word": format_word(u), "k": args.k}
    return _report("fdtc", inputs, {"interval": str(interval), "lo": interval.to_json()[0], "hi": interval.to_json()[1]})


def convergence_rows(u: BraidWord, k_max: int) -> list[dict]:
    rows = []
    for k in range(1, k_max + 1):
        interval = fdtc.floor_interval(u, k)
        rows.append(
            {
                "k": k,
                "floor": int(interval.lo * k),
                "lo": format_rational(interval.lo),
                "hi": format_rational(interval.hi),
            }
        )
    return rows


def cmd_convergence(args) -> dict:
    u = _word(args)
    rows = convergence_rows(u, args.kmax)
    return _report("convergence", {"n": args.n, "word": format_word(u), "kmax": args.kmax}, {"table": rows})


def cmd_decompose(args) -> dict:
    u = _word(args)
    d = decompose(u, find_positive_word=True)
    return _report(
        "decompose",
        {"n": args.n, "word": format_word(u)},
        {**d.to_json(), "verified": verify_decomposition(d, u)},
    )


def _witness_json(w: fdtc.DefectWitness) -> dict:
    return {
        "alpha": format_word(w.alpha),
        "beta": format_word(w.beta),
        "interval": w.interval.to_json(),
        "source": w.source,
    }


def cmd_defect(args) -> dict:
    best = fdtc.defect_search(args.n, args.samples, args.len, args.k, args.seed)
    results = {"best": _witness_json(best)}
    if args.n >= 3:
        a, b = fdtc.lemma_witness(args.n)
        results["lemma"] = _witness_json(fdtc.DefectWitness(a, b, fdtc.defect_witness(a, b, args.k), "lemma"))
    inputs = {"n": args.n, "samples": args.samples, "len": args.len, "k": args.k, "seed": args.seed}
    return _report("defect", inputs, results)


def cmd_qp(args) -> dict:
    if args.factors is None:
        raise InputError("--factors is required")
    f = bennequin.parse_factorization(args.factors, args.n)
    reports = bennequin.run_all_checks(f, args.k)
    statuses = {r.status for r in reports}
    status = "Violated" if bennequin.Status.VIOLATED in statuses else "ok"
    results = {
        "word": format_word(bennequin.qp_build(f)),
        "factors": len(f),
        "chi4": bennequin.qp_chi4(f),
        "checks": [r.to_json() for r in reports],
    }
    return _report("qp", {"n": args.n, "factors": bennequin.format_factorization(f), "k": args.k}, results, status)


COMMANDS = {
    "eval": cmd_eval,
    "compare": cmd_compare,
    "floor": cmd_floor,
    "fdtc": cmd_fdtc,
    "convergence": cmd_convergence,
    "decompose": cmd_decompose,
    "defect": cmd_defect,
    "qp": cmd_qp,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidtwist", description="Dehornoy floors and FDTC enclosures for braids.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of strands")
    common.add_argument("--word", help='braid word, e.g. "1 -2 1"')
    common.add_argument("--word2")
    common.add_argument("--k", type=int, default=32, help="power used for FDTC enclosures")
    common.add_argument("--tol", help='target width as "p/q"')
    common.add_argument("--kmax", type=int, default=16)
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--len", type=int, default=8)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--factors", help='quasipositive factorization, e.g. "2:1;:2"')
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds (breaks byte-identical output)")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "csv" and report["command"] == "convergence":
        writer = csv.DictWriter(out, fieldnames=["k", "floor", "lo", "hi"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(report["results"]["table"])
        return
    json.dump(report, out, indent=2, sort_keys=False)
    out.write("\n")


def _fail(kind: str, exc: Exception, err) -> None:
    json.dump({"error": kind, "type": type(exc).__name__, "message": str(exc)}, err)
    err.write("\n")


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except BudgetError as exc:
        _fail("budget", exc, err)
        return EXIT_BUDGET
    except (BraidError, ValueError) as exc:
        _fail("input", exc, err)
        return EXIT_INPUT
    if args.timing:
        report["timing"] = round(time.perf_counter() - start, 6)
    _emit(report, args.format, out)
    return EXIT_VIOLATED if report["status"] == "Violated" else EXIT_OK


def run(argv: list[str]) -> tuple[int, str, str]:
    """Invoke :func:`main` in-process and capture its streams."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
