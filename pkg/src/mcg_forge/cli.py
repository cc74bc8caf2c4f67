"""Command-line front end.  All output is deterministic JSON on stdout.

Exit codes: 0 success, 1 verification failed, 2 usage or malformed input.
"""

from __future__ import annotations

import argparse
import difflib
import json
import sys
from importlib import resources
from pathlib import Path

from . import acceptance
from .relations import (
    MatrixFamily,
    PreconditionError,
    check_dim_inf_bound,
    check_naive_bound,
    check_nm_relations,
    witness_search,
)
from .scenarios import SCHEMA_VERSION, FAMILIES, derive_matrix_family, evaluate, implied_bound
from .surface.arrangement import algebraic_intersection, geometric_intersection, twist_curve
from .surface.complex import thicken
from .surface.curves import CombCurve, CurveError, b_curve, meridian
from .surface.fatgraph import FatGraph, build_gamma, caterpillar, edge_removal_connected
from .surface.homology import homology_class
from .symplectic import (
    HomologyClass,
    check_braid,
    check_commute,
    free_certify,
    pairing,
    transvection_defect_rank,
    twist_matrix,
)

GOLDEN_CASES = {
    "graph_g4.json": ["graph", "--genus", "4"],
    "thicken_g3.json": ["thicken", "--genus", "3"],
    "curves_g3.json": ["curves", "--genus", "3"],
    "scenario_braid_5.json": ["scenario", "braid", "--n", "5"],
    "bound_g7.json": ["bound", "--genus", "7"],
    "witness_n1.json": ["witness", "--n", "1", "--d-max", "2"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _envelope(command: str, **payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **payload}


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def _graph(args) -> FatGraph:
    if getattr(args, "graph", None):
        try:
            return FatGraph.from_json(_load_json(args.graph))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.genus is None:
        raise UsageError("--genus or --graph is required")
    if args.kind == "caterpillar":
        return caterpillar(args.genus)
    return build_gamma(args.genus, args.rotation)


def _edges(spec: str | None, m: int) -> list[int]:
    if spec is None:
        return list(range(m))
    try:
        out = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"--edges expects comma separated integers, got {spec!r}") from exc
    if any(not 0 <= e < m for e in out):
        raise UsageError(f"edge ids must lie in 0..{m - 1}")
    return out


def _curve(P, spec: str) -> CombCurve:
    """``m<e>`` is the meridian of edge e, ``b<e>`` the curve crossing it twice."""
    try:
        kind, e = spec[0], int(spec[1:])
    except (IndexError, ValueError) as exc:
        raise UsageError(f"curve spec must look like m3 or b3, got {spec!r}") from exc
    if not 0 <= e < P.graph.n_edges:
        raise UsageError(f"edge {e} out of range")
    if kind == "m":
        return meridian(P, e, label=spec)
    if kind == "b":
        return b_curve(P, e, label=spec)
    raise UsageError(f"unknown curve kind {kind!r}")


def _classes(text: str, g: int) -> HomologyClass:
    try:
        coords = tuple(int(x) for x in text.split(","))
        return HomologyClass(g, coords)
    except ValueError as exc:
        raise UsageError(f"bad class {text!r}: {exc}") from exc


# -- commands ------------------------------------------------------------------------

def cmd_graph(args):
    G = _graph(args)
    conn = [edge_removal_connected(G, e) for e in range(G.n_edges)]
    return 0, _envelope("graph", graph=G.to_json(), summary={
        "vertices": G.n_vertices, "edges": G.n_edges, "trivalent": G.is_trivalent(),
        "connected": G.is_connected(), "edge_removal_connected": conn})


def cmd_thicken(args):
    G = _graph(args)
    P = thicken(G)
    return 0, _envelope("thicken", complex=P.to_json(),
                        summary={"pants": G.n_vertices, "euler_characteristic":
                                 P.euler_characteristic(), "genus": P.genus()})


def cmd_curves(args):
    G = _graph(args)
    P = thicken(G)
    curves = []
    for e in _edges(args.edges, G.n_edges):
        curves.append(meridian(P, e, label=f"m{e}").to_json())
        if G.n_vertices > 2 and len(set(G.endpoints(e))) == 2:
            curves.append(b_curve(P, e, label=f"b{e}").to_json())
    return 0, _envelope("curves", graph=G.name, curves=curves)


def cmd_intersect(args):
    P = thicken(_graph(args))
    x, y = _curve(P, args.first), _curve(P, args.second)
    return 0, _envelope("intersect", pair=[x.label, y.label],
                        geometric=geometric_intersection(x, y),
                        algebraic=algebraic_intersection(x, y))


def cmd_twist(args):
    P = thicken(_graph(args))
    c, about = _curve(P, args.curve), _curve(P, args.about)
    t = twist_curve(c, about, args.power)
    before, axis, after = homology_class(c), homology_class(about), homology_class(t)
    expected = before + (args.power * pairing(axis, before)) * axis
    return (0 if after == expected else 1), _envelope(
        "twist", curve=t.to_json(), class_before=before.to_json(),
        class_after=after.to_json(), class_expected=expected.to_json(),
        homology_consistent=after == expected,
        geometric_with_axis=geometric_intersection(t, about))


def cmd_symplectic(args):
    g = args.genus or 1
    a = _classes(args.a, g) if args.a else HomologyClass.a(g, 1)
    b = _classes(args.b, g) if args.b else HomologyClass.b(g, 1)
    if args.depth is not None and not 1 <= args.depth <= 14:
        raise UsageError("--depth must lie in 1..14")
    out = {"a": a.to_json(), "b": b.to_json(), "pairing": pairing(a, b),
           "commute": check_commute(a, b), "braid": check_braid(a, b),
           "twist_a": twist_matrix(a).to_json(), "twist_b": twist_matrix(b).to_json(),
           "defect_rank_a": transvection_defect_rank(a)}
    if args.depth:
        out["free_certificate"] = free_certify(twist_matrix(a), twist_matrix(b), args.depth,
                                               positive_only=args.positive).to_json()
    return 0, _envelope("symplectic", **out)


def cmd_scenario(args):
    if args.family == "braid":
        param = args.n if args.n is not None else 5
    else:
        if args.genus is None:
            raise UsageError("--genus is required for this family")
        param = args.genus
    try:
        fam = FAMILIES[args.family](param)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = evaluate(fam)
    if args.emit_family and report["matrix_family_ref"] is not None:
        Path(args.emit_family).write_text(dumps(derive_matrix_family(fam).to_json()))
    return (0 if report["ok"] else 1), _envelope("scenario", report=report)


def _read_family(path: str) -> MatrixFamily:
    try:
        return MatrixFamily.from_json(_load_json(path))
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_verify(args):
    fam = _read_family(args.family)
    verdict = check_nm_relations(fam)
    out = {"n": fam.n, "d": fam.d, "relations": verdict.to_json()}
    try:
        out["naive_bound"] = check_naive_bound(fam).to_json()
        out["dim_inf_bound"] = check_dim_inf_bound(fam).to_json()
    except PreconditionError as exc:
        out.setdefault("bound_error", exc.to_json())
    return (0 if verdict.holds else 1), _envelope("verify", check=args.check, **out)


def cmd_witness(args):
    if args.n < 1 or args.d_max < 1:
        raise UsageError("--n and --d-max must be positive")
    res = witness_search(args.n, args.d_max, args.seed)
    return 0, _envelope("witness", seed=args.seed, result=res.to_json())


def cmd_bound(args):
    if args.genus is None or args.genus < 2:
        raise UsageError("--genus >= 2 is required")
    lo, budget, contra = implied_bound(args.genus)
    return 0, _envelope("bound", genus=args.genus, lower=lo, budget=budget,
                        contradiction=contra)


def _golden_dir(args) -> Path:
    if args.golden:
        return Path(args.golden)
    return Path(str(resources.files("mcg_forge") / "golden"))


def golden_outputs() -> dict[str, str]:
    out = {}
    for name, argv in GOLDEN_CASES.items():
        _, payload = dispatch(build_parser().parse_args(argv))
        out[name] = dumps(payload)
    return out


def cmd_selftest(args):
    criteria = acceptance.run_all(quick=args.quick, seed=args.seed)
    gdir = _golden_dir(args)
    golden = []
    for name, text in golden_outputs().items():
        path = gdir / name
        want = path.read_text() if path.exists() else ""
        diff = list(difflib.unified_diff(want.splitlines(), text.splitlines(),
                                         f"golden/{name}", "computed", lineterm="", n=1))
        golden.append({"file": name, "ok": not diff, "diff": diff[:200]})
    ok = all(c["ok"] for c in criteria) and all(x["ok"] for x in golden)
    return (0 if ok else 1), _envelope("selftest", seed=args.seed, quick=args.quick,
                                       criteria=criteria, golden=golden, ok=ok)


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mcg-forge", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    common.add_argument("--summary", action="store_true",
                        help="print a short human summary instead of JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    add = sub.add_parser
    sub.add_parser = lambda name: add(name, parents=[common])

    def graph_flags(q):
        q.add_argument("--genus", type=int)
        q.add_argument("--graph", help="fat graph JSON file instead of a generated graph")
        q.add_argument("--kind", choices=("gamma", "caterpillar"), default="gamma")
        q.add_argument("--rotation", choices=("circle", "twisted"), default="circle")

    for name in ("graph", "thicken"):
        graph_flags(sub.add_parser(name))
    q = sub.add_parser("curves")
    graph_flags(q)
    q.add_argument("--edges")
    q = sub.add_parser("intersect")
    graph_flags(q)
    q.add_argument("first")
    q.add_argument("second")
    q = sub.add_parser("twist")
    graph_flags(q)
    q.add_argument("curve")
    q.add_argument("--about", required=True)
    q.add_argument("--power", type=int, default=1)
    q = sub.add_parser("symplectic")
    q.add_argument("--genus", type=int)
    q.add_argument("--a")
    q.add_argument("--b")
    q.add_argument("--depth", type=int)
    q.add_argument("--positive", action="store_true")
    q = sub.add_parser("scenario")
    q.add_argument("family", choices=sorted(FAMILIES))
    q.add_argument("--genus", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--emit-family")
    q = sub.add_parser("verify")
    q.add_argument("check", choices=("nm",))
    q.add_argument("--family", required=True)
    q = sub.add_parser("witness")
    q.add_argument("--n", type=int, default=1)
    q.add_argument("--d-max", type=int, default=4)
    q.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    q = sub.add_parser("bound")
    q.add_argument("--genus", type=int)
    q = sub.add_parser("selftest")
    q.add_argument("--quick", action="store_true")
    q.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    q.add_argument("--golden")
    return p


COMMANDS = {"graph": cmd_graph, "thicken": cmd_thicken, "curves": cmd_curves,
            "intersect": cmd_intersect, "twist": cmd_twist, "symplectic": cmd_symplectic,
            "scenario": cmd_scenario, "verify": cmd_verify, "witness": cmd_witness,
            "bound": cmd_bound, "selftest": cmd_selftest}


def dispatch(args):
    try:
        return COMMANDS[args.command](args)
    except CurveError as exc:
        raise UsageError(str(exc)) from exc


def _summary(payload: dict) -> str:
    cmd = payload["command"]
    if cmd == "scenario":
        r = payload["report"]
        return f"{r['family']}: {len(r['checks'])} checks, {r['mismatches']} mismatches\n"
    if cmd == "selftest":
        lines = [f"[{'PASS' if c['ok'] else 'FAIL'}] {c['id']:>2} {c['name']}"
                 for c in payload["criteria"]]
        lines += [f"[{'PASS' if x['ok'] else 'FAIL'}] golden {x['file']}" for x in payload["golden"]]
        return "\n".join(lines) + "\n"
    flat = dict(payload.get("summary", {}), **payload)
    keys = [k for k in sorted(flat) if not isinstance(flat[k], (dict, list))]
    return "".join(f"{k}: {flat[k]}\n" for k in keys)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        code, payload = dispatch(args)
    except UsageError as exc:
        sys.stdout.write(dumps({"schema_version": SCHEMA_VERSION,
                                "error": {"kind": "usage", "message": str(exc)}}))
        return 2
    sys.stdout.write(_summary(payload) if args.summary else dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
