"""Batch command line driver.

Subcommands read one scenario JSON file and write a deterministic JSON
report to stdout (or an SVG document for ``render``).  Exit code 0 on
success, 2 on any scenario validation failure.

Scenario format::

    {
      "source": {"blacks": [[q, r], ...]}
                | {"family": "diagonal"|"comb"|"full"|"random", "params": {...}}
                | {"reduction": {"family": {...}, "bits": {...}, "geometry": {...}}},
      "window": {"center": [0, 0], "radius": 50} | {"q": [a, b], "r": [c, d]},
      "resolution": {"n_max": 3, "r_max": 8, "size_threshold": 64,
                     "trace_budget": 10000, "witness_budget": 8},
      "analyses": ["phi1", "phi1_primed", "phi2+", "phi2-", "phi3+", "phi3-",
                   "phi4", {"oracle": 3},
                   {"trace": {"edge": [[0,0],[0,1]], "direction": "forward",
                              "max_steps": 100, "quarter": ["+", 1]}},
                   {"descent_stats": {"path": 0, "steps": 32}}]
    }

Reports carry no timestamps and serialize with sorted keys, so identical
scenarios produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import reduction as red
from .coloring import ColoringSource, source_from_json
from .connectivity import in_quarter
from .edgetrace import Edge, trace
from .grid import BallWindow, QuarterPlane, RectWindow, Tile, Window
from .render import Overlays, render_svg
from .verdict import Verdict
from .wincheck import (Resolution, crossing_oracle, eval_phi1, eval_phi1_primed,
                       eval_phi2, eval_phi3, eval_phi4)


class ScenarioError(Exception):
    pass


def _window_from_json(obj: dict) -> Window:
    if obj is None:
        raise ScenarioError("scenario needs a window")
    if "radius" in obj:
        center = obj.get("center", [0, 0])
        return BallWindow(Tile(*center), int(obj["radius"]))
    if "q" in obj and "r" in obj:
        return RectWindow(int(obj["q"][0]), int(obj["q"][1]),
                          int(obj["r"][0]), int(obj["r"][1]))
    raise ScenarioError(f"bad window description: {obj!r}")


def _resolution_from_json(obj: dict, window: Window) -> Resolution:
    obj = obj or {}
    try:
        return Resolution(
            n_max=obj.get("n_max", 3),
            r_max=obj.get("r_max", 8),
            size_threshold=obj.get("size_threshold", 64),
            trace_budget=obj.get("trace_budget", 10_000),
            witness_budget=obj.get("witness_budget", 8),
            window=window,
        )
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc


def _source_from_scenario(obj: dict, seed: int | None):
    spec = obj.get("source")
    if spec is None:
        raise ScenarioError("scenario needs a source")
    if "reduction" in spec:
        rspec = spec["reduction"]
        try:
            fam = red.family_from_json(rspec["family"])
            bits = red.bits_from_json(rspec.get("bits", {}))
            geom = red.geometry_from_json(rspec.get("geometry", {}))
        except (KeyError, ValueError) as exc:
            raise ScenarioError(f"bad reduction spec: {exc}") from exc
        return red.reduction_source(fam, bits, geom), (fam, bits, geom)
    try:
        return source_from_json(spec, seed), None
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc


_FORMULAS = {
    "phi1": eval_phi1,
    "phi1_primed": eval_phi1_primed,
    "phi2+": lambda src, res: eval_phi2(src, "+", res),
    "phi2-": lambda src, res: eval_phi2(src, "-", res),
    "phi3+": lambda src, res: eval_phi3(src, "+", res),
    "phi3-": lambda src, res: eval_phi3(src, "-", res),
    "phi4": eval_phi4,
}


def _run_analysis(entry: Any, src: ColoringSource, res: Resolution,
                  reduction_parts) -> tuple[str, dict]:
    if isinstance(entry, str):
        fn = _FORMULAS.get(entry)
        if fn is None:
            raise ScenarioError(f"unknown analysis {entry!r}")
        verdict: Verdict = fn(src, res)
        payload = verdict.to_json()
        payload["resolution"] = res.to_json()
        return entry, payload
    if not isinstance(entry, dict) or len(entry) != 1:
        raise ScenarioError(f"bad analysis entry: {entry!r}")
    kind, arg = next(iter(entry.items()))
    if kind == "oracle":
        n = int(arg)
        try:
            value = crossing_oracle(src, n, res.window)
        except ValueError as exc:
            raise ScenarioError(str(exc)) from exc
        return f"oracle({n})", {"crossing": value}
    if kind == "trace":
        try:
            (aq, ar), (bq, br) = arg["edge"]
            e = Edge(Tile(aq, ar), Tile(bq, br))
            region = None
            if "quarter" in arg:
                sign, n = arg["quarter"]
                region = in_quarter(QuarterPlane(sign, int(n)))
            tr = trace(src, e, arg.get("direction", "forward"),
                       arg.get("max_steps", res.trace_budget), region)
        except (KeyError, TypeError, ValueError) as exc:
            raise ScenarioError(f"bad trace spec: {exc}") from exc
        return "trace", tr.to_json()
    if kind == "descent_stats":
        if reduction_parts is None:
            raise ScenarioError("descent_stats needs a reduction source")
        fam, bits, _ = reduction_parts
        try:
            path = int(arg["path"])
            steps = int(arg["steps"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ScenarioError(f"bad descent_stats spec: {exc}") from exc
        counts = red.descent_stats(fam, bits, path, steps)
        return f"descent_stats({path})", {"steps": steps, "below_level_counts": counts}
    raise ScenarioError(f"unknown analysis {kind!r}")


def run_scenario(obj: dict, seed: int | None = None) -> dict:
    """Evaluate every requested analysis; deterministic report dict."""
    if not isinstance(obj, dict):
        raise ScenarioError("scenario must be a JSON object")
    src, reduction_parts = _source_from_scenario(obj, seed)
    window = _window_from_json(obj.get("window"))
    res = _resolution_from_json(obj.get("resolution"), window)
    report: dict[str, Any] = {}
    for entry in obj.get("analyses", []):
        key, payload = _run_analysis(entry, src, res, reduction_parts)
        report[key] = payload
    return report


def _render_scenario(obj: dict, seed: int | None = None) -> str:
    src, _ = _source_from_scenario(obj, seed)
    window = _window_from_json(obj.get("window"))
    overlays = Overlays()
    for spec in obj.get("overlays", {}).get("quarter_planes", []):
        overlays.quarter_planes.append(QuarterPlane(spec[0], int(spec[1])))
    for spec in obj.get("overlays", {}).get("borders", []):
        overlays.borders.append(QuarterPlane(spec[0], int(spec[1])))
    for t in obj.get("overlays", {}).get("highlight", []):
        overlays.highlight.add(Tile(t[0], t[1]))
    return render_svg(src, window, overlays)


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioError(f"cannot read scenario {path}: {exc}") from exc


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="infhex",
        description="Finite-resolution analyses of infinite-board hex colorings.")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized scenario sources")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, doc in (("analyze", "evaluate formula verdicts"),
                      ("reduce", "run reduction analyses"),
                      ("trace", "dump edge traces"),
                      ("oracle", "run window crossing checks")):
        p = sub.add_parser(name, help=doc)
        p.add_argument("scenario", help="scenario JSON file")
    p = sub.add_parser("render", help="render the window as SVG")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    args = parser.parse_args(argv)
    try:
        scenario = _load(args.scenario)
        if args.command == "render":
            svg = _render_scenario(scenario, args.seed)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(svg)
            else:
                sys.stdout.write(svg)
            return 0
        report = run_scenario(scenario, args.seed)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
