"""``cohesion-lab`` command line."""
from __future__ import annotations

import argparse
import sys

from ..algebra.parse import ParseError
from ..rig.prop2 import catalog as rig_catalog
from ..topos.fixtures import FIXTURES
from ..topos.site import BUILTIN_SITES, check_precohesive_site
from .checks import Config
from .report import to_json, to_text
from .runner import run
from .scenario import CHECKS, UnresolvedName, load_scenario

EXIT_PARSE = 3


def _parser():
    p = argparse.ArgumentParser(prog="cohesion-lab",
                                description="Run cohesion checks described in scenario files.")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run every check in a scenario")
    r.add_argument("file")
    r.add_argument("--json", action="store_true", help="emit the structured report")
    r.add_argument("--fail-fast", action="store_true", help="stop at the first failing check")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--max-enumeration", type=int, default=10 ** 7)
    r.add_argument("--idempotent-degree-bound", type=int, default=4)
    r.add_argument("--monomial-order", default="grevlex")
    v = sub.add_parser("validate", help="parse a scenario and resolve its names")
    v.add_argument("file")
    sub.add_parser("catalog", help="list built-in rigs, sites, fixtures and checks")
    return p


def _load(path):
    try:
        return load_scenario(path), None
    except (ParseError, UnresolvedName) as exc:
        return None, f"{path}: {exc}"
    except OSError as exc:
        return None, f"{path}: {exc.strerror}"


def main(argv=None):
    args = _parser().parse_args(argv)
    if args.command == "catalog":
        print("rigs: " + ", ".join(rig_catalog()))
        sites = []
        for name, make in BUILTIN_SITES.items():
            ok = "pre-cohesive" if check_precohesive_site(make()) else "not pre-cohesive"
            sites.append(f"{name} ({ok})")
        print("sites: " + ", ".join(sites))
        print("fixtures: " + ", ".join(FIXTURES))
        print("checks: " + ", ".join(sorted(CHECKS)))
        return 0
    scenario, err = _load(args.file)
    if err:
        print(err, file=sys.stderr)
        return EXIT_PARSE
    if args.command == "validate":
        print(f"ok: {len(scenario.definitions)} definitions, {len(scenario.checks)} checks")
        return 0
    config = Config(args.max_enumeration, args.idempotent_degree_bound, args.monomial_order,
                    args.seed)
    report = run(scenario, config, fail_fast=args.fail_fast)
    sys.stdout.write(to_json(report) if args.json else to_text(report))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
