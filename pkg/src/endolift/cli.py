"""Command line front end: every verb prints a JSON report envelope, or a markdown/CSV rendering of its table."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .cases import g2_charset, g2_families, ikeda
from .charsets import CharSet, classify, mw_factorizations, symmetric_partitions
from .errors import EndoliftError, InvariantViolation
from .exactnum import PiPower
from .franke import franke_terms, franke_terms_sp, lifting_terms
from .lifts import (
    enumerate_families,
    g3_weight_table,
    lefschetz_bd,
    lefschetz_bd_factor,
    lefschetz_c,
    lefschetz_c_factor,
    multiplicity,
)
from .partitions import FILTERS, classify_eta, enumerate_representatives, means
from .volumes import vol_ch, vol_st_sp
from .weights import (
    DominantWeight,
    arch_param,
    as_linear,
    charset_of,
    describing_set,
    is_eta_invariant,
    langlands_target,
)

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_INVALID, EXIT_INVARIANT = 0, 2, 3


class UsageError(EndoliftError, ValueError):
    """Invalid command line input."""


def pi_value(value: PiPower) -> dict:
    return {"exact": value.to_json(), "text": str(value), "decimal": value.decimal(12)}


def table(columns: Sequence[str], rows: Sequence[Sequence]) -> dict:
    return {"columns": list(columns), "rows": [[_cell(c) for c in row] for row in rows]}


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(_cell(v) for v in value) + ")"
    return str(value)


def _ints(text: str) -> list[int]:
    try:
        return [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def parse_weight(args) -> DominantWeight:
    coords = _ints(args.weight) if args.weight is not None else None
    shape = args.shape
    if coords is None:
        if getattr(args, "g", None) is None:
            raise UsageError("--weight or --g is required")
        coords = [0] * args.g
        shape = "Sp"
    if shape == "Sp":
        if getattr(args, "g", None) is not None and args.g != len(coords):
            raise UsageError(f"--g {args.g} does not match a weight with {len(coords)} entries")
        return DominantWeight.sp(coords)
    if shape == "PGL":
        return DominantWeight.pgl(coords)
    if shape == "GL":
        return DominantWeight.gl(coords)
    if args.a0 is None:
        raise UsageError("--a0 is required for GLxGL1")
    return DominantWeight.gl_gl1(coords, args.a0)


def cmd_classify_weight(args):
    chi = parse_weight(args)
    lin = as_linear(chi)
    result = {
        "weight": chi.to_json(),
        "linear_weight": lin.to_json(),
        "eta_invariant": is_eta_invariant(lin),
        "describing_set": [e.to_json() for e in describing_set(lin)],
    }
    rows = [("shape", str(lin.shape)), ("eta_invariant", result["eta_invariant"])]
    if result["eta_invariant"]:
        s, w = charset_of(lin)
        t = classify(s)
        param = arch_param(lin)
        result.update(charset=s.to_json(), type=t.to_json(), weight_w=w, arch_param=param.to_json())
        rows += [("charset", str(s)), ("type", str(t)), ("epsilon", param.epsilon)]
        if t.kind != "C":
            result["target"] = langlands_target(s)
            rows.append(("target", result["target"]))
    return result, table(["field", "value"], rows), []


def cmd_charset(args):
    if args.charset is None:
        raise UsageError("--charset is required")
    s = CharSet.parse(args.charset)
    t = classify(s)
    facts = mw_factorizations(s)
    result = {
        "charset": s.to_json(),
        "type": t.to_json(),
        "mw_factorizations": [{"seed": seed.to_json(), "n": n} for seed, n in facts],
    }
    rows = [("mw", f"MW({seed},{n})") for seed, n in facts]
    if t.kind == "C":
        parts = symmetric_partitions(s)
        result["symmetric_partitions"] = [[b.to_json() for b in p] for p in parts]
        rows += [("partition", " ∪ ".join(str(b) for b in p)) for p in parts]
    else:
        result["target"] = langlands_target(s)
        rows.append(("target", result["target"]))
    return result, table(["item", "value"], rows), []


def cmd_partitions(args):
    if args.weight is not None or args.g is not None:
        chi = as_linear(parse_weight(args))
    elif args.n is not None:
        chi = DominantWeight.gl([0] * args.n)
    else:
        raise UsageError("--n, --g or --weight is required")
    reps = enumerate_representatives(chi.n, chi, args.filter)
    records, rows = [], []
    for j in reps:
        m = means(j, chi)
        cls = classify_eta(j)
        records.append({**j.to_json(), "means": [str(x) for x in m], "eta_class": cls.to_json()})
        flags = [k for k, v in cls.to_json().items() if v]
        rows.append((str(j), [str(x) for x in m], ",".join(flags)))
    result = {"n": chi.n, "weight": chi.to_json(), "filter": args.filter, "count": len(reps), "partitions": records}
    return result, table(["blocks", "means", "eta_flags"], rows), []


def _term_rows(terms):
    return [
        (str(t.partition), t.w.images, t.length, t.sign if t.sign is not None else "", sorted(t.kostant_I), t.levi,
         t.shifted_weight)
        for t in terms
    ]


TERM_COLUMNS = ["blocks", "w", "length", "sign", "I", "levi", "shifted_weight"]


def cmd_franke(args):
    chi = as_linear(parse_weight(args))
    terms = franke_terms_sp(chi) if args.side == "sp" else franke_terms(chi)
    result = {"weight": chi.to_json(), "side": args.side, "count": len(terms), "terms": [t.to_json() for t in terms]}
    return result, table(TERM_COLUMNS, _term_rows(terms)), []


def cmd_lift_table(args):
    chi = as_linear(parse_weight(args))
    terms = lifting_terms(chi)
    rows = [
        (str(t.partition), t.length, t.lift_sign_exponent,
         " | ".join(f"{c.kind}:{c.sigma} k={c.k} chi={_cell(c.chi)}" for c in t.block_characters))
        for t in terms
    ]
    result = {"weight": chi.to_json(), "count": len(terms), "terms": [t.to_json() for t in terms]}
    return result, table(["blocks", "length", "lift_sign_exponent", "block_characters"], rows), []


def _family_rows(families):
    rows = []
    for i, f in enumerate(families, start=1):
        octs = " + ".join(f"MW({o.seed_set},{o.n})[{o.kind}]" for o in f.octuples)
        rows.append((i, ",".join(f.tags), octs, f.multiplicity, f.sign_obstructed))
    return rows


FAMILY_COLUMNS = ["family", "tags", "octuples", "multiplicity", "sign_obstructed"]


def _family_warnings(families) -> list[str]:
    warnings = ["conjectural multiplicity"]
    if any(f.sign_obstructed for f in families):
        warnings.append("sign-obstructed family")
    return warnings


def cmd_octuples(args):
    given = parse_weight(args)
    chi = as_linear(given)
    s, _ = charset_of(chi)
    if given.shape.kind == "Sp" and given.n == 2:
        families = g2_families(*given.coords)
    else:
        families = enumerate_families(s)
    result = {
        "weight": chi.to_json(),
        "charset": s.to_json(),
        "count": len(families),
        "families": [f.to_json() for f in families],
    }
    return result, table(FAMILY_COLUMNS, _family_rows(families)), _family_warnings(families)


def cmd_lefschetz(args):
    if args.g is None:
        raise UsageError("--g is required")
    g = args.g
    c = lefschetz_c(g)
    c_checks = [
        {"n": n, "value": str(lefschetz_c_factor(g, n))} for n in range(1, 2 * g + 2, 2) if (2 * g + 1) % n == 0
    ]
    result = {"g": g, "lefschetz_c": c, "c_factor_checks": c_checks}
    rows = [("C", "", c)] + [("C factor", x["n"], x["value"]) for x in c_checks]
    if g >= 1:
        bd = lefschetz_bd(g)
        bd_checks = [{"n": n, "value": str(lefschetz_bd_factor(g, n))} for n in range(1, g + 1) if g % n == 0]
        result.update(lefschetz_bd=bd, bd_factor_checks=bd_checks)
        rows += [("BD", "", bd)] + [("BD factor", x["n"], x["value"]) for x in bd_checks]
    mult = [{"r": r, "multiplicity": multiplicity(g, r)} for r in range(1, g + 2)]
    result["multiplicities"] = mult
    rows += [("multiplicity", m["r"], m["multiplicity"]) for m in mult]
    return result, table(["quantity", "parameter", "value"], rows), ["conjectural multiplicity"]


def cmd_volumes(args):
    if args.g_max is None or args.g_max < 1:
        raise UsageError("--g-max must be a positive integer")
    records, rows = [], []
    for g in range(1, args.g_max + 1):
        st, sp, so, spin = vol_st_sp(g), vol_ch("Sp", g), vol_ch("SO", g), vol_ch("Spin", g)
        ratio = sp / so
        records.append({
            "g": g,
            "vol_st_sp": pi_value(st),
            "vol_ch_sp": pi_value(sp),
            "vol_ch_so": pi_value(so),
            "vol_ch_spin": pi_value(spin),
            "ratio": pi_value(ratio),
        })
        rows.append((g, st, sp, so, ratio))
    columns = ["g", "vol_st_sp", "vol_ch_sp", "vol_ch_so", "ratio"]
    return {"rows": records}, table(columns, rows), []


def cmd_examples(args):
    case = args.case
    if case == "g2":
        a, b = _default(args.a, 0), _default(args.b, 0)
        families = g2_families(a, b)
        result = {
            "case": "g2", "a": a, "b": b,
            "charset": g2_charset(a, b).to_json(),
            "count": len(families),
            "families": [f.to_json() for f in families],
        }
        return result, table(FAMILY_COLUMNS, _family_rows(families)), _family_warnings(families)
    if case == "g3":
        a, b, c = _default(args.a, 0), _default(args.b, 0), _default(args.c, 0)
        rows = g3_weight_table(a, b, c)
        result = {"case": "g3", "a": a, "b": b, "c": c, "rows": [r.to_json() for r in rows]}
        return result, table(["scalar", "pair", "c1_block", "d2_block"],
                             [(r.scalar, r.pair, r.c1_block, r.d2_block) for r in rows]), []
    if case == "ikeda":
        gamma, k = _default(args.gamma, 1), _default(args.k, 0)
        rep = ikeda(gamma, k)
        f = rep.family
        result = {"case": "ikeda", **rep.to_json()}
        return result, table(["gamma", "k", "weight", "label", "octuples"],
                             [(gamma, k, rep.weight, rep.label,
                               " + ".join(f"MW({o.seed_set},{o.n})" for o in f.octuples))]), []
    raise UsageError("--case must be one of g2, g3, ikeda")


def _default(value, fallback):
    return fallback if value is None else value


COMMANDS = {
    "classify-weight": cmd_classify_weight,
    "charset": cmd_charset,
    "partitions": cmd_partitions,
    "franke": cmd_franke,
    "lift-table": cmd_lift_table,
    "octuples": cmd_octuples,
    "lefschetz": cmd_lefschetz,
    "volumes": cmd_volumes,
    "examples": cmd_examples,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="endolift", description=__doc__)
    parser.add_argument("--version", action="version", version=f"endolift {__version__}")
    parser.add_argument("verb", choices=list(COMMANDS))
    parser.add_argument("--format", choices=["json", "md", "csv"], default="json")
    parser.add_argument("--g", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--weight", help="comma separated integers; an Sp g-tuple a_g,...,a_1 by default")
    parser.add_argument("--shape", choices=["Sp", "PGL", "GL", "GLxGL1"], default="Sp")
    parser.add_argument("--a0", type=int)
    parser.add_argument("--charset", help="comma separated half-integers, e.g. -3/2,3/2")
    parser.add_argument("--filter", choices=list(FILTERS), default="all")
    parser.add_argument("--side", choices=["gl", "sp"], default="gl")
    parser.add_argument("--case", choices=["g2", "g3", "ikeda"])
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)
    parser.add_argument("--c", type=int)
    parser.add_argument("--gamma", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--g-max", dest="g_max", type=int)
    return parser


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if v is not None}


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2, ensure_ascii=False) + "\n"
    tab = envelope["table"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(tab["columns"])
        writer.writerows(tab["rows"])
        return buf.getvalue()
    lines = [f"## endolift {envelope['command']}", ""]
    lines.append("| " + " | ".join(tab["columns"]) + " |")
    lines.append("|" + "---|" * len(tab["columns"]))
    for row in tab["rows"]:
        lines.append("| " + " | ".join(c.replace("|", "\\|") for c in row) + " |")
    for w in envelope["warnings"]:
        lines.append("")
        lines.append(f"> warning: {w}")
    return "\n".join(lines) + "\n"


def report(argv: Sequence[str]) -> dict:
    """Parse ``argv`` and build the report envelope (raises on invalid input)."""
    args = build_parser().parse_args(list(argv))
    result, tab, warnings = COMMANDS[args.verb](args)
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": args.verb,
        "input": _echo(args),
        "result": result,
        "table": tab,
        "warnings": warnings,
    }


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        envelope = report(argv)
        fmt = envelope["input"].get("format", "json")
        stdout.write(render(envelope, fmt))
    except SystemExit as exc:
        return int(exc.code or 0)
    except InvariantViolation as exc:
        stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except (ValueError, EndoliftError) as exc:
        stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
