"""Command-line interface for the RSHT toolkit.

Inputs are facet-list files or bundled generator names; outputs are
facet-list files, CSV round reports, and JSON summaries. Exit codes:
0 success, 1 expectation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .complexes import Complex
from .engine import RshtConfig, rsht_batch
from .generators import GENERATORS, connected_sum, cross_product
from .homology import homology
from .io import facet_lines, parse_facet_file, write_facet_file
from .presets import (CSV_FIELDS, ExpectationFailure, PresetError,
                      builtin_presets, run_preset, write_csv)
from .validate import FlipDescriptor, bistellar_flip


def load_complex(source: str) -> Complex:
    """A facet-list path, or a bundled generator name like 'bing-house:4'."""
    if os.path.exists(source):
        return parse_facet_file(source)
    name, _, arg = source.partition(":")
    if name in GENERATORS:
        params = {}
        if arg:
            fn = GENERATORS[name]
            key = fn.__code__.co_varnames[0] if fn.__code__.co_argcount else None
            if key is None:
                raise ValueError(f"generator {name!r} takes no parameter")
            params[key] = int(arg)
        return GENERATORS[name](**params).complex
    raise ValueError(f"{source!r} is neither a readable file nor one of the "
                     f"bundled generators {sorted(GENERATORS)}")


def emit_complex(K: Complex, out: str | None, normalize: bool) -> None:
    if out:
        write_facet_file(K, out, normalize=normalize)
    else:
        for line in facet_lines(K, normalize=normalize):
            print(line)


def parse_simplex(text: str) -> tuple:
    return tuple(sorted(int(t) for t in text.replace(",", " ").split()))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsht",
        description="Random simple-homotopy simplification of simplicial "
                    "complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="output facet-list path (default stdout)")
        p.add_argument("--normalize", action="store_true",
                       help="relabel vertices 1..n on output")

    p = sub.add_parser("generate", help="emit a bundled complex")
    p.add_argument("name", choices=sorted(GENERATORS))
    p.add_argument("--rooms", type=int, help="rooms for bing-house")
    p.add_argument("--n", type=int, help="size parameter (sphere, circle, "
                                         "simplex dimension)")
    p.add_argument("--m", type=int, help="interval subdivisions")
    p.add_argument("--genus", type=int, help="genus for genus-surface")
    add_out(p)

    p = sub.add_parser("rsht", help="run RSHT rounds and report CSV")
    p.add_argument("input")
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--max-step", type=int, default=10)
    p.add_argument("--cap", type=int, default=10_000,
                   help="total expansion/subdivision cap per round")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policy", choices=("global", "local"), default="global")
    p.add_argument("--trace", action="store_true",
                   help="print per-round move traces to stderr")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--summary", help="JSON summary output path")

    p = sub.add_parser("fvector", help="print the f-vector")
    p.add_argument("input")

    p = sub.add_parser("homology", help="print reduced homology as JSON")
    p.add_argument("input")

    p = sub.add_parser("flip", help="apply a bistellar flip")
    p.add_argument("input")
    p.add_argument("--r", required=True, help="face to remove, e.g. '1 2'")
    p.add_argument("--complement", required=True,
                   help="complementary face, e.g. '3 4'")
    add_out(p)

    p = sub.add_parser("product", help="staircase product of two complexes")
    p.add_argument("left")
    p.add_argument("right")
    add_out(p)

    p = sub.add_parser("connsum", help="connected sum of two complexes")
    p.add_argument("left")
    p.add_argument("right")
    add_out(p)

    p = sub.add_parser("delete-facet", help="remove one maximal face")
    p.add_argument("input")
    p.add_argument("--facet", help="facet to delete (default: first in "
                                   "sorted order)")
    add_out(p)

    p = sub.add_parser("preset", help="run a bundled experiment preset")
    p.add_argument("name", choices=sorted(builtin_presets()))
    p.add_argument("--rounds", type=int, help="override the round count")
    p.add_argument("--seed", type=int, help="override the seed")
    p.add_argument("--out-prefix", help="write <prefix>.csv and <prefix>.json")
    p.add_argument("--log", help="append NDJSON round entries to this file")
    return parser


def _generator_params(args) -> dict:
    fn = GENERATORS[args.name]
    if not fn.__code__.co_argcount:
        return {}
    key = fn.__code__.co_varnames[0]
    by_flag = {"rooms": args.rooms, "n": args.n, "m": args.m, "g": args.genus}
    value = by_flag.get(key)
    if value is None and key == "n" and args.genus is not None:
        value = args.genus
    return {} if value is None else {key: value}


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "generate":
        K = GENERATORS[args.name](**_generator_params(args)).complex
        emit_complex(K, args.out, args.normalize)
        return 0

    if args.command == "rsht":
        K = load_complex(args.input)
        cfg = RshtConfig(max_step=args.max_step, total_expansion_cap=args.cap,
                         seed=args.seed, policy=args.policy, trace=args.trace)
        batch = rsht_batch(K, args.rounds, cfg)
        if args.trace:
            for j, report in enumerate(batch.reports):
                for move in report.move_trace:
                    print(j, *(" ".join(map(str, part))
                               if isinstance(part, tuple) else part
                               for part in move), file=sys.stderr)
        if args.out:
            write_csv(batch, args.out)
        else:
            print(",".join(CSV_FIELDS))
            for j, report in enumerate(batch.reports):
                row = report.as_row(j)
                print(",".join(str(row[k]) for k in CSV_FIELDS))
        if args.summary:
            with open(args.summary, "w") as fh:
                json.dump(batch.summary(), fh, indent=2, sort_keys=True)
                fh.write("\n")
        return 0

    if args.command == "fvector":
        print(" ".join(map(str, load_complex(args.input).f_vector())))
        return 0

    if args.command == "homology":
        h = homology(load_complex(args.input))
        print(json.dumps({"betti": list(h.betti),
                          "torsion": [list(t) for t in h.torsion]}))
        return 0

    if args.command == "flip":
        K = load_complex(args.input)
        fd = FlipDescriptor(r=parse_simplex(args.r),
                            complement=parse_simplex(args.complement))
        emit_complex(bistellar_flip(K, fd), args.out, args.normalize)
        return 0

    if args.command == "product":
        K = cross_product(load_complex(args.left), load_complex(args.right))
        emit_complex(K, args.out, args.normalize)
        return 0

    if args.command == "connsum":
        K = connected_sum(load_complex(args.left), load_complex(args.right))
        emit_complex(K, args.out, args.normalize)
        return 0

    if args.command == "delete-facet":
        K = load_complex(args.input).clone()
        facet = (parse_simplex(args.facet) if args.facet
                 else sorted(K.facets())[0])
        K.remove_face(facet)
        emit_complex(K, args.out, args.normalize)
        return 0

    if args.command == "preset":
        import dataclasses
        preset = builtin_presets()[args.name]
        if args.rounds is not None:
            preset = dataclasses.replace(preset, rounds=args.rounds)
        if args.seed is not None:
            cfg = dataclasses.replace(preset.config, seed=args.seed)
            preset = dataclasses.replace(preset, config=cfg)
        try:
            _, summary, _ = run_preset(preset, out_prefix=args.out_prefix,
                                       log_path=args.log)
        except (PresetError, ExpectationFailure) as exc:
            print(str(exc), file=sys.stderr)
            return 1
        print(json.dumps(summary, indent=2, sort_keys=True))
        return 0

    parser.error(f"unknown command {args.command!r}")


def main() -> None:
    try:
        code = cli_main()
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 1
    sys.exit(code)


if __name__ == "__main__":
    main()
