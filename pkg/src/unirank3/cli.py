"""Command-line front end.

Subcommands: classify, enumerate, jacquet, dual, jord, mult, gl-unitary,
verify.  Output is canonical JSON (sorted keys, compact separators) unless
--format text is chosen; --pretty switches JSON to indented form.  Exit
codes: 0 success, 1 domain error, 2 schema error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .arith import RangeExceeded, ZeroDenominator, rat
from .classical import (
    LineConfig,
    NoFormulaAvailable,
    NotInDualityTable,
    RSElement,
    ass_dual,
    class_rank,
    classical_text,
    jord_rho,
    parse_classical,
)
from .classifier import (
    ClassificationReport,
    ExponentQuery,
    NotACataloguedCase,
    QueryLine,
    RankExceeded,
    classify_region,
    enumerate_case,
    jantzen_classify,
    max_rank,
)
from .glring import gl_delta, m_star, product_key
from .jacquet import Bounds, JacquetTerm, mu_star, mu_star_induced, multiplicity
from .oracle import UnknownSuite, suite_names, verify_suite
from .segments import (
    NotIntegralLength,
    gl_is_unitarizable,
    parse_gl_label,
    parse_segment,
)

__all__ = ["main", "run"]

_DOMAIN_ERRORS = (
    NotACataloguedCase,
    RankExceeded,
    NoFormulaAvailable,
    NotInDualityTable,
    UnknownSuite,
    RangeExceeded,
)

_SCHEMA_ERRORS = (NotIntegralLength, ZeroDenominator)


class _SchemaError(ValueError):
    pass


def _parse_exps(text: str) -> list:
    try:
        return [rat(p) for p in text.split(",") if p.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise _SchemaError(f"bad exponent list {text!r}: {exc}") from exc


def _parse_alpha(text: str):
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _SchemaError(f"bad alpha {text!r}: {exc}") from exc


def _parse_label(text: str):
    try:
        return parse_classical(text)
    except ValueError as exc:
        raise _SchemaError(f"bad label {text!r}: {exc}") from exc


def _key_text(key) -> str:
    return "x".join(str(f) for f in key) if key else "1"


def _element_terms(elem: RSElement) -> list[dict]:
    rows = []
    for (key, cl), c in elem:
        rows.append({"coeff": c, "gl": _key_text(key), "cl": classical_text(cl)})
    rows.sort(key=lambda r: (r["gl"], r["cl"]))
    return rows


def _report_doc(report: ClassificationReport) -> dict:
    return report.to_json_dict()


def _emit(doc, args) -> None:
    if args.format == "json":
        if args.pretty:
            print(json.dumps(doc, sort_keys=True, indent=2))
        else:
            print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        return
    _emit_text(doc)


def _emit_text(doc, indent: str = "") -> None:
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)):
                print(f"{indent}{k}:")
                _emit_text(v, indent + "  ")
            else:
                print(f"{indent}{k}: {v}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent + "  ")
                print()
            else:
                print(f"{indent}{v}")
    else:
        print(f"{indent}{doc}")


def _load_lines(path: str) -> ExponentQuery:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _SchemaError(f"cannot read lines file {path!r}: {exc}") from exc
    if not isinstance(raw, list):
        raise _SchemaError("lines file must hold a JSON list")
    lines = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise _SchemaError(f"line {i} is not an object")
        unknown = set(entry) - {"name", "alpha", "exps", "selfcontragredient"}
        if unknown:
            raise _SchemaError(f"line {i} has unknown fields {sorted(unknown)}")
        if "alpha" not in entry:
            raise _SchemaError(f"line {i} is missing alpha")
        cfg = LineConfig(_parse_alpha(str(entry["alpha"])), str(entry.get("name", f"s{i}")))
        exps = [rat(str(x)) for x in entry.get("exps", [])]
        lines.append(QueryLine(cfg, tuple(exps), bool(entry.get("selfcontragredient", True))))
    return ExponentQuery(tuple(lines))


def _require_rank(label) -> None:
    if class_rank(label) > max_rank():
        raise RankExceeded(f"label rank exceeds the cap {max_rank()}")


# --- subcommand handlers -----------------------------------------------------


def _cmd_classify(args) -> dict:
    if args.lines:
        return _report_doc(jantzen_classify(_load_lines(args.lines)))
    if args.alpha is None or args.exps is None:
        raise _SchemaError("classify needs --alpha and --exps, or --lines")
    q = ExponentQuery.single(_parse_alpha(args.alpha), _parse_exps(args.exps))
    return _report_doc(classify_region(q))


def _cmd_enumerate(args) -> dict:
    if args.alpha is None or args.exps is None:
        raise _SchemaError("enumerate needs --alpha and --exps")
    return _report_doc(enumerate_case(_parse_alpha(args.alpha), _parse_exps(args.exps)))


def _cmd_jacquet(args) -> dict:
    if args.alpha is None or args.label is None:
        raise _SchemaError("jacquet needs --alpha and --label")
    cfg = LineConfig(_parse_alpha(args.alpha))
    label = _parse_label(args.label)
    _require_rank(label)
    return {"label": classical_text(label), "terms": _element_terms(mu_star(label, cfg))}


def _cmd_dual(args) -> dict:
    if args.alpha is None or args.label is None:
        raise _SchemaError("dual needs --alpha and --label")
    cfg = LineConfig(_parse_alpha(args.alpha))
    label = _parse_label(args.label)
    _require_rank(label)
    return {"label": classical_text(label), "dual": classical_text(ass_dual(label, cfg))}


def _cmd_jord(args) -> dict:
    if args.alpha is None or args.label is None:
        raise _SchemaError("jord needs --alpha and --label")
    cfg = LineConfig(_parse_alpha(args.alpha))
    label = _parse_label(args.label)
    _require_rank(label)
    return {"label": classical_text(label), "jord": sorted(jord_rho(label, cfg))}


def _cmd_mult(args) -> dict:
    if args.alpha is None or args.label is None or args.gl is None:
        raise _SchemaError("mult needs --alpha, --gl and --label")
    cfg = LineConfig(_parse_alpha(args.alpha))
    pi = _parse_label(args.label)
    try:
        useg = parse_segment(args.gl)
    except ValueError as exc:
        raise _SchemaError(f"bad segment {args.gl!r}: {exc}") from exc
    _require_rank(pi)
    target = JacquetTerm(product_key([useg]), pi)
    elem = mu_star_induced(m_star(gl_delta(useg)), mu_star(pi, cfg))
    m = multiplicity(target, elem, cfg)
    doc = {"gl": str(useg), "label": classical_text(pi)}
    if isinstance(m, Bounds):
        doc["lower"] = m.lower
        doc["upper"] = m.upper
    else:
        doc["exact"] = m
    return doc


def _cmd_gl_unitary(args) -> dict:
    if args.label is None:
        raise _SchemaError("gl-unitary needs --label")
    try:
        label = parse_gl_label(args.label)
    except ValueError as exc:
        raise _SchemaError(f"bad GL label {args.label!r}: {exc}") from exc
    return {"label": str(label), "unitarizable": gl_is_unitarizable(label)}


def _cmd_verify(args) -> dict:
    if args.suite is None:
        raise _SchemaError("verify needs --suite")
    report = verify_suite(args.suite, args.bound)
    return report.to_json_dict()


_COMMANDS = {
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "jacquet": _cmd_jacquet,
    "dual": _cmd_dual,
    "jord": _cmd_jord,
    "mult": _cmd_mult,
    "gl-unitary": _cmd_gl_unitary,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unirank3",
        description="Rank <= 3 unitarizability queries over one cuspidal line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--alpha")
        p.add_argument("--exps")
        p.add_argument("--label")
        p.add_argument("--gl")
        p.add_argument("--lines")
        p.add_argument("--suite")
        p.add_argument("--bound", type=int, default=4)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--pretty", action="store_true")
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        doc = _COMMANDS[args.command](args)
    except (_SchemaError, *_SCHEMA_ERRORS) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 1
    _emit(doc, args)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
