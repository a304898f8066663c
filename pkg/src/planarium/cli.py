"""Command-line front end: ``planarium <command> [options]``.

Every command writes a JSON object (or CSV rows) with a ``meta`` block that
records the full parameter set, a ``records`` list and a ``summary``.  The
only nondeterministic field is ``meta.generated_at``.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, Sequence

from . import __version__
from .appendix import APPENDIX, appendix_instances, appendix_lists
from .classify import (
    ScanResult,
    is_do_exponents,
    is_do_polynomial,
    scan_records,
    theorem_predicate,
)
from .curves import (
    ABSOLUTELY_IRREDUCIBLE,
    count_affine_points,
    get_preset,
    preset_curve,
    threshold_degree_check,
    weil_lower_bound,
)
from .errors import FieldTooLarge, ParameterMissing, PlanariumError
from .ffcore import FieldCtx, parse_field
from .planarity import (
    DELTA,
    LINEARIZED,
    TWO_TO_ONE,
    decide_planarity,
    transport_orbits,
)
from .poly import format_bipoly, format_unipoly, reduce_qmap
from .rdp import SymbolicRDP, family_kind, rdp_instantiate, rdp_zero_param_do

SCHEMA_VERSION = 1

SCAN_COLUMNS = ["p", "k", "m", "d", "is_do", "witnesses", "predicted"]
PLANARITY_COLUMNS = ["field", "family", "k", "m", "d", "a", "planar", "method", "image_size", "witness"]


# -- output -------------------------------------------------------------------

def _csv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    return v


def emit_report(records: Iterable[dict], fmt: str = "json", out=None, meta: dict | None = None,
                summary: Callable[[], dict] | dict | None = None,
                columns: Sequence[str] | None = None) -> None:
    """Serialise records, streaming one at a time.

    JSON without ``meta``/``summary`` is a bare array; otherwise an object
    {"schema_version", "meta", "records", "summary"}.  ``summary`` may be a
    callable evaluated after the records are consumed.  CSV writes the fixed
    ``columns`` header (or the first record's keys) and one row per record.
    """
    out = out or sys.stdout
    if fmt == "csv":
        it = iter(records)
        first = next(it, None)
        cols = list(columns) if columns else (list(first) if first else [])
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(cols)
        if first is not None:
            for rec in _chain(first, it):
                writer.writerow([_csv_cell(rec.get(c)) for c in cols])
        return
    if fmt == "text":
        for rec in records:
            out.write(" ".join(f"{k}={_csv_cell(v)}" for k, v in rec.items()) + "\n")
        if summary is not None:
            s = summary() if callable(summary) else summary
            out.write("summary " + json.dumps(s, sort_keys=False) + "\n")
        return
    bare = meta is None and summary is None
    if not bare:
        out.write('{"schema_version": %d,\n "meta": %s,\n "records": ' % (SCHEMA_VERSION, json.dumps(meta)))
    out.write("[")
    sep = "\n  "
    for rec in records:
        out.write(sep + json.dumps(rec))
        sep = ",\n  "
    out.write("\n]" if sep != "\n  " else "]")
    if not bare:
        s = summary() if callable(summary) else summary
        out.write(',\n "summary": %s}' % json.dumps(s))
    out.write("\n")


def _chain(first, rest):
    yield first
    yield from rest


def _meta(command: str, args: argparse.Namespace, **extra) -> dict:
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "output", "format", "threads", "no_timestamp", "command")}
    meta = {"command": command, "version": __version__, "params": params}
    meta.update(extra)
    if not getattr(args, "no_timestamp", False):
        meta["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return meta


def _ordered_map(fn, items: Sequence, threads: int) -> Iterator:
    """map() that keeps input order; uses a process pool when threads > 1."""
    if threads <= 1 or len(items) <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads)))


# -- argument helpers -----------------------------------------------------------

def _field(args) -> FieldCtx:
    if not getattr(args, "field", None):
        raise ParameterMissing("--field is required (e.g. --field 3^3 or --field 3^2/1,0,1)")
    F = parse_field(args.field)
    cap = os.environ.get("PLANARIUM_MAX_Q")
    if cap and F.q > int(cap):
        raise FieldTooLarge(f"field size {F.q} exceeds PLANARIUM_MAX_Q={cap}")
    return F


def _kind(args, p: int | None = None) -> int:
    if getattr(args, "family", None):
        m = family_kind(args.family)
    elif getattr(args, "m", None) is not None:
        m = args.m
    else:
        raise ParameterMissing("give --family (D/E/F/G/H) or --m")
    return m


def _m_set(text: str | None, p: int) -> list[int]:
    if not text:
        return list(range(p))
    return [int(t) for t in text.split(",")]


# -- commands -----------------------------------------------------------------

def cmd_field_info(args) -> int:
    F = _field(args)
    rec = {"field": F.spec, "p": F.p, "e": F.e, "q": F.q, "modulus": list(F.modulus)}
    if args.list_elements:
        rec["elements"] = [str(x) for x in F.elements()]
    emit_report([rec], args.format, args.output, _meta("field-info", args), {"ok": True})
    return 0


def cmd_rdp_show(args) -> int:
    p = args.p
    m = _kind(args)
    spec = SymbolicRDP.build(args.k, m, args.d, p)
    rec = {
        "name": spec.name, "p": p, "k": spec.k, "m": m, "d": spec.d,
        "terms": [[i, c] for i, c in spec.terms],
        "monomials": [list(t) for t in spec.monomials()],
        "text": spec.format(),
    }
    if args.field:
        F = _field(args)
        a = F.parse_elem(args.a or "1")
        f = rdp_instantiate(spec, a, F)
        rec["a"] = str(a)
        rec["instantiated"] = format_unipoly(f)
        rec["reduced"] = format_unipoly(reduce_qmap(f))
    emit_report([rec], args.format, args.output, _meta("rdp-show", args), {"ok": True})
    return 0


def cmd_do_check(args) -> int:
    p = args.p
    m = _kind(args)
    spec = SymbolicRDP.build(args.k, m, args.d, p)
    rep = is_do_polynomial(spec)
    rec = {"p": p, "k": args.k, "m": m, "d": args.d, "text": spec.format(), **rep.to_dict(),
           "predicted": theorem_predicate(p, args.k, m, args.d),
           "zero_parameter_do": rdp_zero_param_do(args.k, m, args.d, p)}
    if args.reduced:
        # exploration only: DO shape after folding exponents mod X^q - X
        F = _field(args)
        a = F.parse_elem(args.a or "1")
        g = reduce_qmap(rdp_instantiate(spec, a, F))
        rec["reduced_do_exploratory"] = is_do_exponents(g.exponents(), p)
        rec["reduced_poly"] = format_unipoly(g)
    emit_report([rec], args.format, args.output, _meta("do-check", args), {"ok": True})
    return 0


def _scan_stream(args, m_set, result: ScanResult, do_only: bool = False) -> Iterator[dict]:
    p = args.p
    ks = [k for k in range(2, args.kmax + 1) if args.include_p_multiples or k % p]
    # validate once (ceiling, kinds) before fanning out
    next(scan_records(p, args.kmax, 1, m_set, args.include_p_multiples), None)
    jobs = [(p, k, args.dmax, m_set, args.include_p_multiples) for k in ks]
    for chunk in _ordered_map(_scan_job, jobs, args.threads):
        for rec in chunk:
            result.scanned += 1
            result.do_count += rec["is_do"]
            if rec["is_do"] == rec["predicted"]:
                result.matches += 1
            else:
                result.discrepancies.append((rec["k"], rec["m"], rec["d"], rec["predicted"], rec["is_do"]))
            if not do_only or rec["is_do"]:
                yield rec


def _scan_job(job):
    p, k, d_max, m_set, include = job
    out = []
    for m in m_set:
        base = SymbolicRDP.build(k, m, 1, p)
        for d in range(1, d_max + 1):
            if not include and d % p == 0:
                continue
            rep = is_do_polynomial(SymbolicRDP(k, m, d, p, base.terms))
            out.append({"p": p, "k": k, "m": m, "d": d, "is_do": rep.is_do,
                        "witnesses": [list(w) for w in rep.witnesses],
                        "predicted": theorem_predicate(p, k, m, d)})
    return out


def cmd_classify_scan(args) -> int:
    m_set = _m_set(args.m_set, args.p)
    result = ScanResult()
    box = {"p": args.p, "k_max": args.kmax, "d_max": args.dmax, "m_set": m_set,
           "include_p_multiples": args.include_p_multiples}
    emit_report(_scan_stream(args, m_set, result, args.do_only), args.format, args.output,
                _meta("classify-scan", args, box=box), result.to_dict, columns=SCAN_COLUMNS)
    return 0 if not result.discrepancies else 1


def cmd_appendix_verify(args) -> int:
    """Scan, then compare against the theorem, the golden list and its displayed forms.

    Every kind of mismatch lands in the single ``discrepancies`` list, so the
    exit status is 0 exactly when that list is empty.
    """
    m_set = _m_set(args.m_set, args.p)
    result = ScanResult()
    extra: list[dict] = []
    golden = args.p in (3, 5)

    def records():
        for rec in _scan_stream(args, m_set, result):
            where = {"k": rec["k"], "m": rec["m"], "d": rec["d"]}
            if golden and appendix_lists(args.p, rec["k"], rec["m"], rec["d"]) != rec["is_do"]:
                extra.append({**where, "reason": "golden list membership"})
            if not golden and rec["is_do"] and len(rec["witnesses"]) != 1:
                extra.append({**where, "reason": "DO but not a monomial"})
            if rec["is_do"]:
                yield rec

    def summary():
        d = result.to_dict()
        d["discrepancies"] = [
            {"k": k, "m": m, "d": dd, "predicted": pr, "observed": ob, "reason": "theorem predicate"}
            for k, m, dd, pr, ob in result.discrepancies
        ] + extra
        if golden:
            n_checked = 0
            for c in appendix_instances(_entries(args.p)):
                n_checked += 1
                if not c.ok:
                    d["discrepancies"].append({**c.to_dict(), "reason": "displayed form"})
            d["displayed_forms_checked"] = n_checked
        d["ok"] = not d["discrepancies"]
        status["ok"] = d["ok"]
        return d

    status = {"ok": False}
    box = {"p": args.p, "k_max": args.kmax, "d_max": args.dmax, "m_set": m_set,
           "include_p_multiples": args.include_p_multiples}
    emit_report(records(), args.format, args.output, _meta("appendix-verify", args, box=box),
                summary, columns=SCAN_COLUMNS)
    if args.format == "csv":
        summary()
    return 0 if status["ok"] else 1


def _entries(p):
    return [e for e in APPENDIX if e.p == p]


def _planarity_job(job):
    field_spec, k, m, d, a_code, method, cross = job
    F = parse_field(field_spec)
    a = F.from_code(a_code)
    spec = SymbolicRDP.build(k, m, d, F.p)
    f = rdp_instantiate(spec, a, F)
    rep = decide_planarity(f, method)
    rec = {"field": F.spec, "family": spec.name, "k": k, "m": m, "d": d, "a": str(a), **rep.to_dict()}
    if cross:
        others = {}
        do_shape = is_do_exponents(f.exponents(), F.p)
        for meth in (DELTA, TWO_TO_ONE, LINEARIZED):
            if meth == rep.method or (meth != DELTA and not do_shape):
                continue
            others[meth] = decide_planarity(f, meth).planar
        rec["cross_check"] = others
        rec["methods_agree"] = all(v == rep.planar for v in others.values())
    return rec


def cmd_planarity(args) -> int:
    F = _field(args)
    m = _kind(args, F.p)
    if args.all_a or args.orbit_reps:
        if args.orbit_reps:
            a_list = [orb[0] for orb in transport_orbits(F, args.d)]
        else:
            a_list = list(F.nonzero())
    else:
        if not args.a:
            raise ParameterMissing("give --a ELEM, --all-a or --orbit-reps")
        a_list = [F.parse_elem(args.a)]
    jobs = [(F.spec, args.k, m, args.d, a.code, args.method, args.cross_check) for a in a_list]
    stats = {"records": 0, "planar": 0, "disagreements": 0}

    def records():
        for rec in _ordered_map(_planarity_job, jobs, args.threads):
            stats["records"] += 1
            stats["planar"] += rec["planar"]
            if rec.get("methods_agree") is False:
                stats["disagreements"] += 1
            yield rec

    cols = PLANARITY_COLUMNS + (["cross_check", "methods_agree"] if args.cross_check else [])
    emit_report(records(), args.format, args.output, _meta("planarity", args, field_spec=F.spec),
                lambda: dict(stats), columns=cols)
    return 1 if stats["disagreements"] else 0


def cmd_curve_count(args) -> int:
    F = _field(args)
    pr = get_preset(args.preset)
    a = F.one if pr.fixed_a is not None else F.parse_elem(args.a or "1")
    curve = preset_curve(args.preset, F, a)
    rep = count_affine_points(curve, allow_large=args.allow_large)
    rec = {"preset": pr.name, "field": F.spec, "a": str(a),
           "normalization": pr.note or "general a",
           "curve": format_bipoly(curve), **rep.to_dict(),
           "exceeds_boundary": rep.total_points > rep.boundary_points,
           "irreducibility_source": ABSOLUTELY_IRREDUCIBLE.get(pr.name, "not asserted")}
    emit_report([rec], args.format, args.output, _meta("curve-count", args), {"ok": True})
    return 0


def cmd_curve_bound(args) -> int:
    rec = {"q": args.q, "degree": args.degree, "weil_bound": weil_lower_bound(args.q, args.degree)}
    if args.boundary_max is not None:
        rec["boundary_max"] = args.boundary_max
        rec["exceeds_boundary"] = threshold_degree_check(args.q, args.degree, args.boundary_max)
    emit_report([rec], args.format, args.output, _meta("curve-bound", args), {"ok": True})
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--output", "-o", type=argparse.FileType("w"), default=None,
                        help="output file (default stdout)")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    common.add_argument("--no-timestamp", action="store_true", help="omit meta.generated_at")

    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--family", help="D, E, F, G or H (m = 0..4)")
    kind.add_argument("--m", type=int, help="kind index m in [0, p-1]")

    parser = argparse.ArgumentParser(prog="planarium", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field-info", parents=[common], help="describe a field")
    s.add_argument("--field", required=True)
    s.add_argument("--list-elements", action="store_true")
    s.set_defaults(func=cmd_field_info)

    s = sub.add_parser("rdp-show", parents=[common, kind], help="show a hat polynomial")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--field")
    s.add_argument("--a")
    s.set_defaults(func=cmd_rdp_show)

    s = sub.add_parser("do-check", parents=[common, kind], help="DO decision for one (p, k, m, d)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--reduced", action="store_true",
                   help="also test the polynomial reduced mod X^q - X (exploration, needs --field)")
    s.add_argument("--field")
    s.add_argument("--a")
    s.set_defaults(func=cmd_do_check)

    for name, func, help_ in (("classify-scan", cmd_classify_scan, "scan DO detection vs the classification"),
                              ("appendix-verify", cmd_appendix_verify, "verify the golden DO list")):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--p", type=int, required=True)
        s.add_argument("--kmax", type=int, default=40)
        s.add_argument("--dmax", type=int, default=28)
        s.add_argument("--m-set", help="comma separated kinds (default 0..p-1)")
        s.add_argument("--include-p-multiples", action="store_true")
        if name == "classify-scan":
            s.add_argument("--do-only", action="store_true", help="emit only DO records")
        s.set_defaults(func=func)

    s = sub.add_parser("planarity", parents=[common, kind], help="planarity of a hat polynomial")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--field", required=True)
    s.add_argument("--a")
    s.add_argument("--all-a", action="store_true")
    s.add_argument("--orbit-reps", action="store_true",
                   help="one a per class {a b^d}; the full --all-a scan is the reference")
    s.add_argument("--method", default="auto", choices=["auto", DELTA, TWO_TO_ONE, LINEARIZED])
    s.add_argument("--cross-check", action="store_true", help="run every applicable method")
    s.set_defaults(func=cmd_planarity)

    s = sub.add_parser("curve-count", parents=[common], help="count affine points on a preset curve")
    s.add_argument("--preset", required=True)
    s.add_argument("--field", required=True)
    s.add_argument("--a")
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=cmd_curve_count)

    s = sub.add_parser("curve-bound", parents=[common], help="Weil lower bound and threshold")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--boundary-max", type=int)
    s.set_defaults(func=cmd_curve_bound)
    return parser


def run_job(argv: Sequence[str] | None = None) -> int:
    """Parse and run one command; returns the process exit status."""
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "curve count" / "curve bound" spellings
    if len(argv) >= 2 and argv[0] == "curve" and argv[1] in ("count", "bound"):
        argv = [f"curve-{argv[1]}"] + argv[2:]
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanariumError as exc:
        print(f"planarium {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    finally:
        if args.output is not None:
            args.output.close()


def main() -> None:
    sys.exit(run_job())


if __name__ == "__main__":
    main()
