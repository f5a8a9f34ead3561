"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage/config errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import calculus as C
from .arquiver import (
    classify,
    component_json,
    component_kind,
    component_window,
    export_dot,
    syzygy_string,
)
from .chars import lift_characters, table_json
from .errors import ConfigError, StringAlgError
from .gf import GF4, OMEGA
from .modules import band_module, string_hom_basis, string_module
from .rep import ModuleRep
from .verify import SuiteConfig, config_from_dict, report_json, run_suite
from .words import (
    Band,
    String,
    enumerate_bands,
    enumerate_strings,
    parse_word,
)

_SCALARS = {"1": (1, 1), "w": (OMEGA, 2), "w2": (GF4.inv(OMEGA), 2)}


def _degree(args) -> int:
    return 1 if getattr(args, "field", "gf2") == "gf2" else 2


def _emit(args, text: str):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _module_from_args(args) -> ModuleRep:
    if getattr(args, "string", None):
        return string_module(parse_word(args.string), _degree(args))
    if getattr(args, "band", None):
        lam, deg = _SCALARS[args.lam]
        deg = max(deg, _degree(args))
        return band_module(Band.from_word(parse_word(args.band)), lam, args.mult, deg)
    raise ConfigError("need --string or --band")


def cmd_strings(args):
    classes = enumerate_strings(args.max_len)
    data = {"max_len": args.max_len, "count": len(classes), "classes": [s.text() for s in classes]}
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2) + "\n")
    else:
        _emit(args, "\n".join(data["classes"]) + f"\n# {data['count']} classes\n")


def cmd_bands(args):
    classes = enumerate_bands(args.max_len)
    data = {"max_len": args.max_len, "count": len(classes), "classes": [b.text() for b in classes]}
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2) + "\n")
    else:
        _emit(args, "\n".join(data["classes"]) + f"\n# {data['count']} classes\n")


def cmd_module(args):
    M = _module_from_args(args)
    info = C.structure(M)
    if args.format == "json":
        payload = M.to_json_dict()
        payload["structure"] = info
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"{M.label}: dim {M.dim} over {M.field}",
            f"radical layers: {info['radical_series']}",
            f"socle layers:   {info['socle_series']}",
            f"composition multiplicities: {info['multiplicities']}",
        ]
        _emit(args, "\n".join(lines) + "\n")


def cmd_hom(args):
    degree = _degree(args)
    S = parse_word(args.source)
    T = parse_word(args.target)
    basis = string_hom_basis(S, T, degree)
    matrix_dim = C.hom_dim(string_module(S, degree), string_module(T, degree))
    data = {
        "source": S.text(),
        "target": T.text(),
        "combinatorial_dim": len(basis),
        "matrix_dim": matrix_dim,
        "maps": [
            sorted(
                [r, c]
                for r in range(h.matrix.nrows)
                for c in range(h.matrix.ncols)
                if h.matrix.entry(r, c)
            )
            for h in basis
        ],
    }
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2) + "\n")
    else:
        _emit(
            args,
            f"hom({S.text()} -> {T.text()}): dim {len(basis)} "
            f"(matrix engine: {matrix_dim})\n"
            + "\n".join(f"  map {i}: {m}" for i, m in enumerate(data["maps"]))
            + "\n",
        )


def cmd_stable_end(args):
    M = _module_from_args(args)
    d = C.stable_end_dim(M)
    if args.format == "json":
        _emit(args, json.dumps({"module": M.label, "stable_end_dim": d}) + "\n")
    else:
        _emit(args, f"stable end dim of {M.label}: {d}\n")


def cmd_ext1(args):
    degree = _degree(args)
    M = string_module(parse_word(args.source), degree)
    N = string_module(parse_word(args.target), degree)
    d = C.ext1_dim(M, N)
    if args.format == "json":
        _emit(args, json.dumps({"source": M.label, "target": N.label, "ext1_dim": d}) + "\n")
    else:
        _emit(args, f"ext1({M.label}, {N.label}) = {d}\n")


def cmd_omega(args):
    s = String.from_word(parse_word(args.string))
    t = syzygy_string(s, args.power, _degree(args))
    if args.format == "json":
        _emit(args, json.dumps({"string": s.text(), "power": args.power, "result": t.text()}) + "\n")
    else:
        _emit(args, f"omega^{args.power}({s.text()}) = {t.text()}\n")


def cmd_component(args):
    s = String.from_word(parse_word(args.string))
    comp = component_window(s, args.radius)
    if args.format == "dot":
        _emit(args, export_dot(comp))
    elif args.format == "json":
        comp.kind = component_kind(s)
        _emit(args, json.dumps(component_json(comp, stable_end_dims=args.stable_end), indent=2) + "\n")
    else:
        lines = [f"component window of {s.text()} (radius {args.radius}):"]
        for t in comp.node_list():
            lines.append(f"  d={comp.nodes[t]}  dim={len(t.letters)+1:3d}  {t.text()}")
        _emit(args, "\n".join(lines) + "\n")


def cmd_taxonomy(args):
    s = String.from_word(parse_word(args.string))
    family = classify(s, radius=args.radius, degree=_degree(args))
    if args.format == "json":
        _emit(args, json.dumps({"string": s.text(), "family": family}) + "\n")
    else:
        _emit(args, f"{s.text()}: {family}\n")


def cmd_chars(args):
    data = table_json()
    data["lift_characters"] = {
        f"n={n}": [list(c) for c in lift_characters(n)] for n in range(args.n_max + 1)
    }
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2) + "\n")
    else:
        lines = ["classes: " + " ".join(data["classes"])]
        for i, row in enumerate(data["irreducibles"], 1):
            lines.append(f"chi{i}: {row}")
        lines.append(f"decomposition matrix: {data['decomposition_matrix']}")
        for key, val in data["lift_characters"].items():
            lines.append(f"lift {key}: {val}")
        _emit(args, "\n".join(lines) + "\n")


def cmd_verify(args):
    if args.config:
        with open(args.config) as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config is not valid JSON: {exc}")
        cfg = config_from_dict(raw)
    else:
        cfg = SuiteConfig()
    if args.sections:
        cfg.sections = tuple(args.sections.split(","))
    if args.max_len is not None:
        cfg.string_scan_len = args.max_len
    if args.band_len is not None:
        cfg.band_len = args.band_len
    if args.n_max is not None:
        cfg.tower_n = args.n_max
    if args.radius is not None:
        cfg.radius = args.radius
    cfg.seed = args.seed
    cfg.include_timings = args.timings
    cfg.validate()
    report = run_suite(cfg)
    if args.format == "text":
        lines = []
        for rec in report["checks"]:
            mark = "ok " if rec["status"] == "pass" else "FAIL"
            lines.append(f"[{mark}] {rec['check_id']}")
        s = report["summary"]
        lines.append(f"pass {s['pass']}  fail {s['fail']}  undecided {s['undecided']}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, report_json(report))
    return 0 if report["summary"]["fail"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stringalg",
        description="exact string/band module calculus and verification suite",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_choices=("text", "json")):
        sp.add_argument("--out", help="write output to this path")
        sp.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        sp.add_argument("--field", choices=("gf2", "gf4"), default="gf2")

    sp = sub.add_parser("strings", help="enumerate string classes")
    sp.add_argument("--max-len", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_strings)

    sp = sub.add_parser("bands", help="enumerate band classes")
    sp.add_argument("--max-len", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_bands)

    sp = sub.add_parser("module", help="build a string or band module")
    sp.add_argument("--string")
    sp.add_argument("--band")
    sp.add_argument("--lam", choices=tuple(_SCALARS), default="1")
    sp.add_argument("--mult", type=int, default=1)
    common(sp)
    sp.set_defaults(fn=cmd_module)

    sp = sub.add_parser("hom", help="hom space between string modules")
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_hom)

    sp = sub.add_parser("stable-end", help="stable endomorphism dimension")
    sp.add_argument("--string")
    sp.add_argument("--band")
    sp.add_argument("--lam", choices=tuple(_SCALARS), default="1")
    sp.add_argument("--mult", type=int, default=1)
    common(sp)
    sp.set_defaults(fn=cmd_stable_end)

    sp = sub.add_parser("ext1", help="first extension dimension")
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_ext1)

    sp = sub.add_parser("omega", help="syzygy of a string, as a string")
    sp.add_argument("--string", required=True)
    sp.add_argument("--power", type=int, default=1)
    common(sp)
    sp.set_defaults(fn=cmd_omega)

    sp = sub.add_parser("component", help="stable component window")
    sp.add_argument("--string", required=True)
    sp.add_argument("--radius", type=int, default=2)
    sp.add_argument("--stable-end", action="store_true")
    common(sp, ("text", "json", "dot"))
    sp.set_defaults(fn=cmd_component)

    sp = sub.add_parser("taxonomy", help="classification family of a string")
    sp.add_argument("--string", required=True)
    sp.add_argument("--radius", type=int, default=6)
    common(sp)
    sp.set_defaults(fn=cmd_taxonomy)

    sp = sub.add_parser("chars", help="character table and lift characters")
    sp.add_argument("--n-max", type=int, default=3)
    common(sp)
    sp.set_defaults(fn=cmd_chars)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--config", help="JSON config file")
    sp.add_argument("--sections", help="comma-separated check ids")
    sp.add_argument("--max-len", type=int, default=None, help="string scan bound")
    sp.add_argument("--band-len", type=int, default=None, help="band scan bound")
    sp.add_argument("--n-max", type=int, default=None, help="tower bound")
    sp.add_argument("--radius", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timings", action="store_true")
    common(sp, ("json", "text"))
    sp.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except StringAlgError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
