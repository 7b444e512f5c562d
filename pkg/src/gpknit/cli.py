"""Command-line front end: ``gpknit analyze|report|export|check|tn``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arknit.gprj import ar_quiver_gprj
from .arknit.hcat import h_ar_quiver_An
from .arknit.quiver import ARQuiver
from .arknit.sub import sub_full_ar_quiver, sub_stable_components
from .errors import InfiniteDimensional, OracleDisagreement, PresentationError
from .gpclass import is_one_gorenstein_omega, is_self_injective, verify_omega_g
from .presentation import QuadraticPresentation, parse_presentation
from .reports import SCHEMA, analyze, simple_pairs, simple_pairs_text, orbits_text, singularity_text
from .tnlift import tn_gp_indecomposables

EXIT_PARSE, EXIT_INFINITE, EXIT_ORACLE = 1, 2, 3


def load(path: str) -> QuadraticPresentation:
    text = Path(path).read_text()
    pres = parse_presentation(text, name=Path(path).stem)
    pres.path_basis  # raises InfiniteDimensional early
    return pres


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _merge(quivers: list[ARQuiver], name: str) -> ARQuiver:
    q = ARQuiver(name=name)
    for c in quivers:
        for x in c.vertices:
            q.add_vertex(x)
        q.arrows.update(c.arrows)
        q.tau.update(c.tau)
        q.notes += c.notes
    return q


def cmd_analyze(args) -> int:
    rep = analyze(load(args.path), args.seed)
    _emit(_dump(rep.to_json()), args.out)
    return 0


def cmd_report(args) -> int:
    pres = load(args.path)
    if args.kind in ("pairs", "cor44"):
        pairs = simple_pairs(pres, args.seed)
        if args.format == "json":
            _emit(_dump({"schema": SCHEMA, "pairs": [list(p) for p in pairs]}), args.out)
        else:
            _emit(simple_pairs_text(pairs), args.out)
        return 0
    rep = analyze(pres, args.seed)
    if args.format == "json":
        key = "singularity" if args.kind == "singularity" else "orbit_presentations"
        _emit(_dump({"schema": SCHEMA, key: getattr(rep, key)}), args.out)
    else:
        _emit(singularity_text(rep) if args.kind == "singularity" else orbits_text(rep), args.out)
    return 0


def _export_object(args):
    what = args.what[0]
    n = int(args.what[1]) if len(args.what) > 1 else None
    if what == "h-an":
        if n is None:
            raise SystemExit("--what h-an needs N")
        return h_ar_quiver_An(n, args.seed)["full"]
    if args.path is None:
        raise SystemExit(f"--what {what} needs a presentation file")
    pres = load(args.path)
    if what == "gprj":
        return ar_quiver_gprj(pres, args.seed)
    if what == "sub":
        return sub_full_ar_quiver(pres, args.seed)
    if what == "sub-stable":
        return _merge(sub_stable_components(pres, args.seed), f"S-stable {pres.name}")
    if what == "tn":
        if n is None:
            raise SystemExit("--what tn needs N")
        entries = tn_gp_indecomposables(pres, n, args.seed)
        return {"schema": SCHEMA, "n": n, "descriptors": [e.to_json() for e in entries]}
    raise SystemExit(f"unknown export target {what!r}")


def cmd_export(args) -> int:
    obj = _export_object(args)
    if isinstance(obj, dict):
        if args.format == "dot":
            raise SystemExit("tn export is JSON only")
        _emit(_dump(obj), args.out)
    elif args.format == "dot":
        _emit(obj.to_dot(), args.out)
    else:
        _emit(_dump(dict(schema=SCHEMA, **obj.to_json())), args.out)
    return 0


def cmd_check(args) -> int:
    pres = load(args.path)
    if args.property == "omega-g":
        r = verify_omega_g(pres, args.seed)
        verdict, extra = r.is_omega_g, r.failures
    elif args.property == "one-gorenstein":
        r = is_one_gorenstein_omega(pres, args.seed)
        verdict, extra = r.holds, [f"{a}Λ is neither perfect nor projective" for a in r.witness]
    else:
        verdict, extra = is_self_injective(pres), []
    print(f"{args.property}: {str(verdict).lower()}")
    for line in extra:
        print(f"  {line}")
    return 0


def cmd_tn(args) -> int:
    entries = tn_gp_indecomposables(load(args.path), args.n, args.seed)
    if args.format == "json":
        _emit(_dump({"schema": SCHEMA, "n": args.n, "descriptors": [e.to_json() for e in entries]}), args.out)
    else:
        lines = [f"{e.descriptor.label}  {[list(d) for d in e.dim_vectors]}" for e in entries]
        lines.append(f"{len(entries)} indecomposable Gorenstein projectives")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpknit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, path=True):
        if path:
            sp.add_argument("path", help="presentation file")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", "-o", help="write to this file instead of stdout")

    a = sub.add_parser("analyze", help="full JSON analysis report")
    common(a)
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("report", help="singularity category, orbit presentations or the simple pairing")
    r.add_argument("kind", choices=["singularity", "orbits", "pairs", "cor44"], help="cor44 is an alias of pairs")
    common(r)
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.set_defaults(func=cmd_report)

    e = sub.add_parser("export", help="AR quivers as DOT or JSON")
    e.add_argument("path", nargs="?", help="presentation file (not needed for h-an)")
    e.add_argument("--what", nargs="+", required=True, metavar="TARGET", help="gprj | sub | sub-stable | h-an N | tn N")
    e.add_argument("--format", choices=["dot", "json"], default="dot")
    common(e, path=False)
    e.set_defaults(func=cmd_export)

    c = sub.add_parser("check", help="single verdicts")
    c.add_argument("property", choices=["omega-g", "one-gorenstein", "self-injective"])
    common(c)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("tn", help="Gorenstein projectives over T_n(Λ)")
    common(t)
    t.add_argument("n", type=int)
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_tn)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfiniteDimensional as exc:
        print(f"error: infinite-dimensional algebra: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except (PresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleDisagreement as exc:
        print(f"error: oracle disagreement: {exc}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
