"""Command-line interface.

Exit codes: 0 success, 1 failed invariant or expectation, 2 bad input,
3 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .elekes import count_incidences, distance_set, normalize_config, partition, quadruple_report
from .errors import BudgetExceeded, CurvedistError, ExcludedPair, InputError
from .harness import (
    DEFAULT_BUDGET,
    INCIDENCE_CAP,
    run_scenario,
    scenario_from_json,
    verify_all,
)
from .serialize import (
    COUNT_COLUMNS,
    config_from_json,
    curve_from_json,
    dump_json,
    isometry_to_json,
    load_json,
    pointset_from_json,
    rows_to_csv,
)
from .symmetry import FiniteSymmetries, find_symmetries


def _read_spec(text: str):
    """A CLI argument is a file path, inline JSON, or bare polynomial text."""
    if os.path.exists(text):
        return load_json(text)
    stripped = text.lstrip()
    if stripped[:1] in "{[\"":
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"bad inline JSON: {e}")
    return text


def _sorted_scalars(values) -> list:
    return sorted(values, key=lambda s: (float(s), str(s)))


def cmd_verify(args) -> int:
    rep = verify_all(budget=args.budget, seed=args.seed)
    for r in rep.results:
        line = f"{r.name:34s} {r.status:5s} {r.detail}"
        print(line)
        if r.counterexample:
            print(f"{'':34s} counterexample: {r.counterexample}")
    print(f"suites: {len(rep.results)}, all passed: {rep.all_passed}")
    if args.json:
        dump_json(rep.as_dict(), args.json)
    return 0 if rep.all_passed else 1


def cmd_scenario(args) -> int:
    spec = load_json(args.file)
    scenario = scenario_from_json(spec, distance_cap=args.distance_cap)
    rep = run_scenario(scenario, incidence_cap=args.incidence_cap)
    for row in rep.rows:
        inc = "-" if row.incidences is None else row.incidences
        print(
            f"m={row.m} n={row.n} D={row.d_count} Q={row.q_count} "
            f"bound={row.bound} I={inc}"
        )
    if rep.slope is not None:
        print(f"slope: {rep.slope:.6f}")
    if rep.excluded_case is not None:
        print(f"excluded case: {rep.excluded_case}")
    print(f"regime {rep.regime}: {'pass' if rep.passed else 'fail'}")
    if args.json:
        dump_json(rep.as_dict(), args.json)
    if args.csv:
        rows = [r.as_dict() for r in rep.rows]
        with open(args.csv, "w") as fh:
            fh.write(rows_to_csv(rows, COUNT_COLUMNS))
    return 0 if rep.passed else 1


def cmd_distances(args) -> int:
    curve = curve_from_json(_read_spec(args.curve))
    pts = pointset_from_json(_read_spec(args.points), curve)
    dset = distance_set(pts, pts, exclude_diagonal=True)
    values = [str(v) for v in _sorted_scalars(dset)]
    out = {"count": len(dset), "squared_distances": values}
    print(dump_json(out), end="")
    return 0


def cmd_symmetries(args) -> int:
    curve = curve_from_json(_read_spec(args.curve))
    got = find_symmetries(curve)
    if isinstance(got, FiniteSymmetries):
        out = {
            "kind": "finite",
            "members": [isometry_to_json(T) for T in got.members],
            "unrepresentable": [
                {
                    "sigma": u.sigma,
                    "c_box": [str(u.c_box[0]), str(u.c_box[1])],
                    "s_box": [str(u.s_box[0]), str(u.s_box[1])],
                }
                for u in got.unrepresentable
            ],
        }
    else:
        out = {"kind": "infinite", "tag": got.tag, "description": got.description}
    print(dump_json(out), end="")
    return 0


def cmd_elekes(args) -> int:
    config, _seed = config_from_json(_read_spec(args.config))
    cfg, report = normalize_config(config)
    rep = quadruple_report(cfg)
    inc = classes = gamma0 = None
    if cfg.m <= args.incidence_cap and cfg.n <= args.incidence_cap:
        inc = count_incidences(cfg)
        if inc != rep.q_count:
            print("invariant failure: incidence count differs from quadruple count", file=sys.stderr)
            return 1
        res = partition(cfg)
        classes = len(res.classes)
        gamma0 = len(res.gamma0)
    row = {
        "m": cfg.m,
        "n": cfg.n,
        "D": rep.d_count,
        "Q": rep.q_count,
        "bound": str(rep.bound),
        "I": inc,
        "classes": classes,
        "gamma0_size": gamma0,
    }
    removed = len(report.removals)
    print(f"normalized: removed {removed} point{'s' if removed != 1 else ''}")
    print(rows_to_csv([row], COUNT_COLUMNS), end="")
    if args.json:
        dump_json(row, args.json)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rows_to_csv([row], COUNT_COLUMNS))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvedist", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", metavar="OUT")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scenario", help="run a size-ladder scenario file")
    s.add_argument("file")
    s.add_argument("--csv", metavar="OUT")
    s.add_argument("--json", metavar="OUT")
    s.add_argument("--incidence-cap", type=int, default=INCIDENCE_CAP)
    s.add_argument("--distance-cap", type=int, default=None)
    s.set_defaults(func=cmd_scenario)

    d = sub.add_parser("distances", help="distinct squared distances of a point set")
    d.add_argument("--curve", required=True)
    d.add_argument("--points", required=True)
    d.set_defaults(func=cmd_distances)

    y = sub.add_parser("symmetries", help="distance-preserving maps fixing a curve")
    y.add_argument("--curve", required=True)
    y.set_defaults(func=cmd_symmetries)

    e = sub.add_parser("elekes", help="normalize a config and emit its count row")
    e.add_argument("--config", required=True)
    e.add_argument("--csv", metavar="OUT")
    e.add_argument("--json", metavar="OUT")
    e.add_argument("--incidence-cap", type=int, default=INCIDENCE_CAP)
    e.set_defaults(func=cmd_elekes)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExcludedPair as e:
        print(f"excluded curve pair: {e.case}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 3
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"invariant failure: {e}", file=sys.stderr)
        return 1
    except CurvedistError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
