"""Command line interface.

Subcommands: solve, classify, oracle, gen, dualsvg.  Exit codes: 0 on
success, 2 on parse errors, 3 on precondition violations; errors are
reported on stderr as one-line JSON objects.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .errors import GeometryError, SceneFormatError
from .generators import GENERATOR_NAMES, generate
from .oracle import sampled_components
from .scene_io import dump_json, parse_scene_text, result_to_doc, scene_to_doc
from .solver import classify, solve
from .svg import render_dual_svg

PARSE_ERROR = 2
PRECONDITION_ERROR = 3


def _fail(kind, message, code):
    sys.stderr.write(json.dumps({"error": {"kind": kind, "message": message}}) + "\n")
    return code


def _load_scene(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_scene_text(fh.read())
    except OSError as exc:
        raise SceneFormatError(str(exc)) from exc


def _atomic_write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _summarize(res):
    lines = [
        f"classification: {res.classification}",
        f"cardinality:    {res.cardinality}",
    ]
    if res.cardinality == "finite":
        lines.append(f"count:          {res.count}")
    lines.append(f"components:     {len(res.components)}")
    for i, c in enumerate(res.components):
        tag = "isolated line" if c.isolated else "connected family"
        chart = c.chart if c.chart is not None else "-"
        lines.append(f"  [{i}] chart={chart} {tag}")
    return "\n".join(lines)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="transversals",
        description="Exact line transversals to segments in R^3",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a scene file")
    p_solve.add_argument("scene")
    p_solve.add_argument("--json", metavar="OUT", help="write the result JSON here")

    p_classify = sub.add_parser("classify", help="print the classification label")
    p_classify.add_argument("scene")

    p_oracle = sub.add_parser("oracle", help="sampled component estimate")
    p_oracle.add_argument("scene")
    p_oracle.add_argument("--resolution", type=int, required=True)

    p_gen = sub.add_parser("gen", help="emit a generator scene")
    p_gen.add_argument("name", choices=sorted(GENERATOR_NAMES))
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument(
        "--points", action="store_true",
        help="shrink arcs to isolated transversals (h1-symmetric)",
    )
    p_gen.add_argument("--out", metavar="FILE")

    p_svg = sub.add_parser("dualsvg", help="dual-plane SVG of a coplanar scene")
    p_svg.add_argument("scene")
    p_svg.add_argument("--out", required=True)

    args = parser.parse_args(argv)

    try:
        if args.command == "solve":
            scene = _load_scene(args.scene)
            res = solve(scene)
            print(_summarize(res))
            if args.json:
                _atomic_write(args.json, dump_json(result_to_doc(res)))
            return 0
        if args.command == "classify":
            print(classify(_load_scene(args.scene)))
            return 0
        if args.command == "oracle":
            count = sampled_components(_load_scene(args.scene), args.resolution)
            print(count)
            return 0
        if args.command == "gen":
            scene = generate(args.name, args.n, points=args.points)
            text = dump_json(scene_to_doc(scene))
            if args.out:
                _atomic_write(args.out, text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "dualsvg":
            scene = _load_scene(args.scene)
            _atomic_write(args.out, render_dual_svg(scene))
            return 0
    except SceneFormatError as exc:
        return _fail("parse", str(exc), PARSE_ERROR)
    except GeometryError as exc:
        return _fail(type(exc).__name__, str(exc), PRECONDITION_ERROR)
    except ValueError as exc:
        return _fail("precondition", str(exc), PRECONDITION_ERROR)
    raise AssertionError("unreachable")  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
