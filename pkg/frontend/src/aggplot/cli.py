"""aggplot: render figures from aggsim CSV artifacts.

    aggplot spec.json
    aggplot --kind profile_panel --input run/profiles.csv --output fig.png
    aggplot --kind loglog --input study/errors.csv --input study/rates.csv --output conv.png
    aggplot --kind surface --input run/profiles.csv --output evolution.png

A JSON spec carries the same fields: kind, inputs, output, labels, title.
Exit codes: 0 success, 2 bad spec/schema.
"""

from __future__ import annotations

import argparse
import json
import sys

from .csvio import SchemaError
from .figures import KINDS, FigureSpec, make_figure


def _spec_from_json(path: str) -> FigureSpec:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return FigureSpec(
        kind=data["kind"],
        inputs=tuple(data["inputs"]),
        output=data["output"],
        labels=tuple(data.get("labels", ())),
        title=data.get("title", ""),
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="aggplot", description=__doc__.splitlines()[0])
    parser.add_argument("spec", nargs="?", help="JSON figure spec")
    parser.add_argument("--kind", choices=KINDS)
    parser.add_argument("--input", action="append", default=[], help="input CSV (repeatable)")
    parser.add_argument("--output", help="output image path")
    parser.add_argument("--label", action="append", default=[], help="curve label (repeatable)")
    parser.add_argument("--title", default="")
    args = parser.parse_args(argv)

    try:
        if args.spec:
            spec = _spec_from_json(args.spec)
        else:
            if not (args.kind and args.input and args.output):
                parser.error("either a JSON spec or --kind/--input/--output are required")
            spec = FigureSpec(
                kind=args.kind,
                inputs=tuple(args.input),
                output=args.output,
                labels=tuple(args.label),
                title=args.title,
            )
        meta = make_figure(spec)
    except (SchemaError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"aggplot error: {exc}", file=sys.stderr)
        return 2
    summary = {k: v for k, v in meta.items() if k != "output"}
    print(f"wrote {meta['output']} {summary}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
