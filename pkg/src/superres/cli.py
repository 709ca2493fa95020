"""Command-line interface: ``superres <subcommand> ...``.

Exit codes: 0 success, 2 usage error, 3 bound-degree inconsistency,
4 verification failure, 1 internal error.  Errors are printed to stderr as
one JSON line ``{"code": ..., "error": ...}``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import __version__
from .blockdata import BlockTable, f4_table_from_file
from .diagrams import core, diagram_of, f_coords
from .dimensions import kac_dim, system_from_name, weyl_dim
from .errors import ParseError, SuperresError, UnsupportedCase, UsageError
from .growth import (DEFAULT_WINDOW, complexity_report, geometric_report,
                     z_complexity_report)
from .loperator import l_inv, l_op, orbit
from .resolutions import ModuleDescriptor, term
from .rootdata import Family, SuperWeight, atypicality, build_datum

VERIFY_FAILED = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_weight(p):
    p.add_argument("--family", default="osp2", choices=["osp2"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)


def _add_selectors(p):
    p.add_argument("--family", required=True, choices=["osp2", "osp32", "d21a", "g3", "f4"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--irrational", action="store_true",
                   help="D(2,1;alpha) with irrational alpha (principal block only)")
    p.add_argument("--table", help="F(4) block table file: rows 'l a m1 m2 m3'")


def _add_format(p):
    p.add_argument("--format", default="json", choices=["json", "csv", "table"])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superres", description="Exact block combinatorics, resolutions and "
                     "complexity for osp(2|2n), osp(3|2), D(2,1;alpha), G(3) and F(4).")
    parser.add_argument("--version", action="version", version=f"superres {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name, helptext in (("atyp", "atypicality and witnesses"),
                           ("fcoords", "f-coordinates"),
                           ("diagram", "weight diagram and core"),
                           ("lop", "apply the L-operator"),
                           ("linv", "apply the inverse L-operator")):
        p = sub.add_parser(name, help=helptext)
        _add_weight(p)
        _add_format(p)

    p = sub.add_parser("orbit", help="lambda^(l) for l in [from, to]")
    _add_weight(p)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("dim", help="Weyl dimension of a simple even module")
    p.add_argument("--system", required=True, help="a1, c:N, g2 or b3")
    p.add_argument("--hw", required=True, help="comma-separated highest weight")
    _add_format(p)

    p = sub.add_parser("kacdim", help="dimension of the Kac module K(lambda)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)
    _add_format(p)

    p = sub.add_parser("resolve", help="d-th term of a minimal projective resolution")
    _add_selectors(p)
    p.add_argument("--module", default="simple", choices=["simple", "kac"])
    p.add_argument("--label", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_format(p)

    for name in ("complexity", "zcomplexity"):
        p = sub.add_parser(name, help=f"{name} by exact finite differences")
        _add_selectors(p)
        p.add_argument("--module", default="simple", choices=["simple", "kac"])
        p.add_argument("--label", type=int, required=True)
        p.add_argument("--dmin", type=int, default=DEFAULT_WINDOW[0])
        p.add_argument("--dmax", type=int, default=DEFAULT_WINDOW[1])
        p.add_argument("--report", action="store_true", help="print the full growth report")
        _add_format(p)

    p = sub.add_parser("geom", help="geometric identities c = dim X + dim V, z = dim V_f")
    _add_selectors(p)
    p.add_argument("--kind", required=True, choices=["simple", "kac"])
    p.add_argument("--atypical", type=int, required=True, choices=[0, 1])
    _add_format(p)

    p = sub.add_parser("verify", help="run the bundled verification suites")
    p.add_argument("--suite", required=True,
                   choices=["lemma31", "lemma32", "blocks", "oracle", "counts", "geometry", "all"])
    p.add_argument("--table", help="F(4) block table; F(4) checks are skipped without it")
    _add_format(p)
    return parser


# ---------------------------------------------------------------- helpers

def _family(args) -> Family:
    tag = args.family
    if tag == "osp2":
        if args.n is None:
            raise UsageError("--family osp2 needs --n")
        return Family.osp2(args.n)
    if tag == "d21a":
        if args.irrational:
            return Family.d21a(irrational=True)
        if args.p is None or args.q is None:
            raise UsageError("--family d21a needs --p and --q (or --irrational)")
        return Family.d21a(args.p, args.q)
    return {"osp32": Family.osp32, "g3": Family.g3, "f4": Family.f4}[tag]()


def _table(args) -> Optional[BlockTable]:
    path = getattr(args, "table", None)
    if path is None:
        return None
    return f4_table_from_file(path)


def _descriptor(args) -> ModuleDescriptor:
    fam = _family(args)
    table = _table(args)
    if fam.tag == "f4" and table is None:
        raise UnsupportedCase("F(4) needs --table")
    block = 0 if fam.tag in ("osp2", "osp32") else args.k
    if fam.tag in ("osp2", "osp32") and args.k:
        raise UsageError(f"--k is not used for {fam}")
    return ModuleDescriptor(fam, args.module, args.label, block, table)


def _weight(args) -> tuple:
    fam = Family.osp2(args.n)
    datum = build_datum(fam)
    return datum, SuperWeight.parse(fam, args.weight)


def _ints(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


# --------------------------------------------------------------- commands

def cmd_atyp(args):
    datum, lam = _weight(args)
    at = atypicality(datum, lam)
    return {"degree": at.degree, "witnesses": [datum.root_name(g) for g in at.witnesses]}


def cmd_fcoords(args):
    datum, lam = _weight(args)
    fc = f_coords(datum, lam)
    return {"f_minus1": str(fc.f_minus1), "f": list(fc.f)}


def cmd_diagram(args):
    datum, lam = _weight(args)
    d = diagram_of(datum, lam)
    return {"diagram": d.text, "key": d.key, "core": core(d).text}


def cmd_lop(args):
    datum, lam = _weight(args)
    return {"result": str(l_op(datum, lam))}


def cmd_linv(args):
    datum, lam = _weight(args)
    return {"result": str(l_inv(datum, lam))}


def cmd_orbit(args):
    datum, lam = _weight(args)
    return {"orbit": [{"l": l, "weight": str(w)} for l, w in orbit(datum, lam, args.start, args.stop)]}


def cmd_dim(args):
    return {"dim": str(weyl_dim(system_from_name(args.system), _ints(args.hw)))}


def cmd_kacdim(args):
    fam = Family.osp2(args.n)
    return {"dim": str(kac_dim(SuperWeight.parse(fam, args.weight)))}


def cmd_resolve(args):
    return term(_descriptor(args), args.d).to_json()


def _sequence_rows(desc, window):
    rows = []
    for d in range(window[0], window[1] + 1):
        t = term(desc, d)
        rows.append({"d": d, "dim_lower": str(t.dim_lower), "dim_upper": str(t.dim_upper),
                     "count": t.count})
    return rows


def _growth(args, key, fn):
    desc = _descriptor(args)
    window = (args.dmin, args.dmax)
    if args.format == "csv":
        return _sequence_rows(desc, window)
    rep = fn(desc, window)
    if not args.report:
        return {key: rep.c}
    out = rep.to_json()
    out[key] = out.pop("c")
    if desc.table is not None and desc.table.external:
        out["provenance"] = "external"
    return out


def cmd_complexity(args):
    return _growth(args, "c", complexity_report)


def cmd_zcomplexity(args):
    return _growth(args, "z", z_complexity_report)


def cmd_geom(args):
    fam = _family(args)
    table = _table(args)
    out = geometric_report(fam, args.kind, args.atypical, table).to_json()
    if table is not None and table.external:
        out["provenance"] = "external"
    return out


def cmd_verify(args):
    from .verify import run_suite

    return run_suite(args.suite, _table(args))


COMMANDS = {
    "atyp": cmd_atyp, "fcoords": cmd_fcoords, "diagram": cmd_diagram, "lop": cmd_lop,
    "linv": cmd_linv, "orbit": cmd_orbit, "dim": cmd_dim, "kacdim": cmd_kacdim,
    "resolve": cmd_resolve, "complexity": cmd_complexity, "zcomplexity": cmd_zcomplexity,
    "geom": cmd_geom, "verify": cmd_verify,
}


# ----------------------------------------------------------------- output

def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _flat_rows(obj) -> List[dict]:
    if isinstance(obj, list):
        return obj
    for key in ("orbit", "summands"):
        if key in obj and isinstance(obj[key], list):
            return obj[key]
    if "suites" in obj:
        return [{"suite": s["suite"], "check": c["name"],
                 "pass": c.get("pass", ""), "skipped": c.get("skipped", "")}
                for s in obj["suites"] for c in s["checks"]]
    return [{k: (v if not isinstance(v, (list, dict)) else _dumps(v)) for k, v in obj.items()}]


def render(obj, fmt: str) -> str:
    if fmt == "json":
        if isinstance(obj, list):
            obj = {"rows": obj}
        return _dumps(obj)
    rows = _flat_rows(obj)
    keys = sorted({k for r in rows for k in r})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(r.get(k, "")) for k in keys})
        return buf.getvalue().rstrip("\n")
    widths = {k: max([len(k)] + [len(_cell(r.get(k, ""))) for r in rows]) for k in keys}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys).rstrip()]
    for r in rows:
        lines.append("  ".join(_cell(r.get(k, "")).ljust(widths[k]) for k in keys).rstrip())
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return _dumps(v)
    return str(v)


def _csv_sequence(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "dim_lower", "dim_upper", "count"])
    for r in rows:
        w.writerow([r["d"], r["dim_lower"], r["dim_upper"], r["count"]])
    return buf.getvalue().rstrip("\n")


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
        if args.command in ("complexity", "zcomplexity") and args.format == "csv":
            text = _csv_sequence(result)
        else:
            text = render(result, args.format)
        print(text, file=out)
        if args.command == "verify" and not result["pass"]:
            return VERIFY_FAILED
        return 0
    except SuperresError as exc:
        print(_dumps({"error": str(exc), "code": exc.exit_code}), file=err)
        return exc.exit_code
    except Exception as exc:  # anything else is a bug; report it in the same format
        print(_dumps({"error": f"internal error: {type(exc).__name__}: {exc}", "code": 1}), file=err)
        return 1


def main(argv: Optional[List[str]] = None) -> int:
    sys.exit(run(argv))
