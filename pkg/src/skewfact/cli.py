"""Command line entry point: ``skewfact``."""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .actions import IndexTooLarge
from .constructors import FixtureIntegrityError, SpecError, make
from .factorization import find_dihedral, find_regular_dihedral, recognize_dihedral
from .group import OverThreshold, RandomSource
from .perm import format_cycles
from .subgroups import core_small

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewfact", description="Check dihedral factorizations of simple groups.")
    sub = p.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run registered scenarios")
    vsub = verify.add_subparsers(dest="family", required=True)

    t1 = vsub.add_parser("table1", help="Table 1 rows")
    t1.add_argument("--row", type=int, choices=range(1, 9), metavar="1..8")
    t1.add_argument("--m", type=int)
    t1.add_argument("--extended", action="store_true")
    t1.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    t1.add_argument("--json", action="store_true")

    lm = vsub.add_parser("lemma-magma", help="the computer-checked nonexistence items")
    lm.add_argument("--item", type=int, choices=(1, 2, 3, 4))
    lm.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    lm.add_argument("--json", action="store_true")

    t2 = vsub.add_parser("theorem2", help="dihedral-product cases")
    t2.add_argument("--case", choices=("1.2", "1.3", "2"))
    t2.add_argument("--m", type=int)
    t2.add_argument("--json", action="store_true")

    ps = vsub.add_parser("prop-skew", help="skew product instances")
    ps.add_argument("--json", action="store_true")

    an = sub.add_parser("analyze", help="order, simplicity and action properties")
    an.add_argument("spec")
    an.add_argument("--action", default="natural")
    an.add_argument("--json", action="store_true")

    sd = sub.add_parser("search-dihedral", help="look for a dihedral subgroup")
    sd.add_argument("spec")
    sd.add_argument("--order", type=int, required=True)
    sd.add_argument("--regular", action="store_true")
    sd.add_argument("--exhaustive", action="store_true")
    sd.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    sd.add_argument("--json", action="store_true")

    co = sub.add_parser("core", help="core of a subgroup")
    co.add_argument("spec")
    co.add_argument("--sub", required=True)
    co.add_argument("--json", action="store_true")
    return p


# ---------------------------------------------------------------- verify


def _table1_scenarios(args) -> list[harness.Scenario]:
    if args.m is not None:
        if args.row is None:
            raise UsageError("--m needs --row 4, 6 or 8")
        try:
            return [harness.table1_scenario(args.row, args.m)]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    ids = [s.id for s in harness.REGISTRY.values() if s.id.startswith("table1.") and (args.extended or not s.extended)]
    if args.row is not None:
        ids = [i for i in ids if i == f"table1.row{args.row}" or i.startswith(f"table1.row{args.row}.")]
    return harness.resolve(ids)


def _lemma_scenarios(args) -> list[harness.Scenario]:
    ids = [i for i in harness.default_ids() if i.startswith("lemma24.")]
    if args.item is not None:
        ids = [i for i in ids if i == f"lemma24.item{args.item}" or i.startswith(f"lemma24.item{args.item}.")]
    return harness.resolve(ids)


def _theorem2_scenarios(args) -> tuple[list[harness.Scenario], list[harness.OutOfScope]]:
    if args.m is not None and args.case not in (None, "2"):
        raise UsageError("--m applies to case 2 only")
    out: list[harness.OutOfScope] = []
    scenarios: list[harness.Scenario] = []
    if args.case in (None, "1.2"):
        scenarios.append(harness.REGISTRY["theorem2.case12"])
    if args.case in (None, "1.3"):
        out.append(harness.OUT_OF_SCOPE["theorem2.case13"])
    if args.case in (None, "2"):
        if args.m is not None:
            try:
                scenarios.append(harness.theorem2_case2_scenario(args.m))
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        else:
            scenarios.append(harness.REGISTRY["theorem2.case2.m8"])
    return scenarios, out


def _print_reports(reports: list[harness.ScenarioReport], out_of_scope: list[harness.OutOfScope], as_json: bool) -> None:
    if as_json:
        doc = [r.as_dict() for r in reports]
        doc += [{"scenario": o.id, "status": "out-of-scope", "notes": [o.reason]} for o in out_of_scope]
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    for r in reports:
        print(f"{r.status.upper():12} {r.scenario}  [{r.evidence}, {r.elapsed_ms} ms]")
        for c in r.checks:
            mark = "ok " if c.ok else "BAD"
            print(f"    {mark} {c.name}: expected {c.expected}, got {c.actual}")
        for k, v in r.witnesses.items():
            print(f"    witness {k} = {v}")
        for n in r.notes:
            print(f"    note: {n}")
    for o in out_of_scope:
        print(f"{'OUT-OF-SCOPE':12} {o.id}  {o.reason}")


def _verify(args) -> int:
    seed = getattr(args, "seed", harness.DEFAULT_SEED)
    out_of_scope: list[harness.OutOfScope] = []
    if args.family == "table1":
        scenarios = _table1_scenarios(args)
    elif args.family == "lemma-magma":
        scenarios = _lemma_scenarios(args)
    elif args.family == "theorem2":
        scenarios, out_of_scope = _theorem2_scenarios(args)
    else:
        scenarios = harness.resolve([i for i in harness.default_ids() if i.startswith("prop-skew.")])
    reports = harness.run_scenarios(scenarios, seed)
    _print_reports(reports, out_of_scope, args.json)
    return harness.exit_code(reports)


# ---------------------------------------------------------------- tools


def _analyze(args) -> int:
    doc = harness.analyze(args.spec, args.action)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
        return EXIT_PASS
    print(f"{doc['spec']}: degree {doc['degree']}, order {doc['order']}")
    print(f"  simple: {doc['simple']} ({doc['simple_evidence']})")
    if "simple_witness_order" in doc:
        print(f"  proper normal subgroup of order {doc['simple_witness_order']}")
    if "subgroup_order" in doc:
        print(f"  action on cosets of a subgroup of order {doc['subgroup_order']}, kernel order {doc['kernel_order']}")
    for k, v in doc["action_report"].items():
        print(f"  {k}: {v}")
    return EXIT_PASS


def _search(args) -> int:
    X = make(args.spec)
    rng = RandomSource(args.seed).spawn(f"search:{args.spec}:{args.order}")
    if args.regular:
        if args.order != X.degree:
            raise UsageError(f"a regular subgroup has order equal to the degree {X.degree}")
        res = find_regular_dihedral(X, rng)
    else:
        try:
            res = find_dihedral(X, args.order, "exhaustive" if args.exhaustive else "randomized", rng)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if res.witness is not None and recognize_dihedral(res.witness.group) is None:
        raise AssertionError("returned witness is not dihedral")
    doc = {
        "spec": args.spec,
        "order": args.order,
        "found": res.found,
        "evidence": res.evidence,
        "method": res.method,
        "tried": res.tried,
        "notes": res.notes,
        "witness": res.witness.as_dict() if res.witness else None,
    }
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        verdict = "found" if res.found else "none"
        print(f"D{args.order} in {args.spec}: {verdict} [{res.evidence}, {res.method}]")
        if res.witness:
            print(f"  a = {format_cycles(res.witness.rotation)}")
            print(f"  b = {format_cycles(res.witness.reflection)}")
        if res.notes:
            print(f"  {res.notes}")
    if not res.found and res.evidence != "deterministic":
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def _core(args) -> int:
    X = make(args.spec)
    H = harness.parse_subgroup(X, args.sub)
    res = core_small(X, H)
    doc = {
        "spec": args.spec,
        "sub": args.sub,
        "order_X": str(X.order()),
        "order_H": str(H.order()),
        "core_order": str(res.core.order()),
        "core_generators": [format_cycles(g) for g in res.core.generators if not g.is_identity()],
        "method": res.method,
        "passes": res.iterations,
    }
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"core of {args.sub} in {args.spec}: order {doc['core_order']} ({res.method}, {res.iterations} passes)")
        for g in doc["core_generators"]:
            print(f"  {g}")
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_USAGE
    handlers = {"verify": _verify, "analyze": _analyze, "search-dihedral": _search, "core": _core}
    try:
        return handlers[args.command](args)
    except (UsageError, SpecError, harness.UnknownScenario, IndexTooLarge, OverThreshold) as exc:
        print(f"skewfact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FixtureIntegrityError as exc:
        print(f"skewfact: fixture error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
