#!/usr/bin/env python3
"""Sweep randomized grid specs: construct, verify, compare with closed forms.

Draws canonical specs of dimension 2..6 under a size cap, builds the
vertex/edge/supermagic labelings for each, scans every unit cube, and
checks the observed magic sums against the closed-form predictions.
Exits nonzero on the first mismatch (there should never be one).
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from gridmagic import (
    GridSpec,
    build_labelings,
    closed_form_sums,
    combine_supermagic,
    verify_edge_magic,
    verify_supermagic,
    verify_vertex_magic,
)


def draw_specs(count: int, seed: int, max_total: int) -> list[GridSpec]:
    rng = np.random.default_rng(seed)
    specs: list[GridSpec] = []
    while len(specs) < count:
        d = int(rng.integers(2, 7))
        cap = max(2.0, (max_total / (2 * d)) ** (1.0 / d))
        dims = tuple(
            sorted(
                (
                    max(2, int(np.exp(rng.uniform(np.log(2.0), np.log(cap + 1.0)))))
                    for _ in range(d)
                ),
                reverse=True,
            )
        )
        spec = GridSpec(dims)
        if spec.vertex_count + spec.edge_count <= max_total:
            specs.append(spec)
    return specs


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20260810)
    parser.add_argument("--max-total", type=int, default=10**6)
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args()

    specs = draw_specs(args.count, args.seed, args.max_total)
    start = time.perf_counter()
    largest = (0, None)
    for index, spec in enumerate(specs):
        predicted = closed_form_sums(spec)
        f, g = build_labelings(spec)
        total = combine_supermagic(f, g)
        reports = {
            "vertex": (verify_vertex_magic(spec, f), predicted.c_vertex),
            "edge": (verify_edge_magic(spec, g), predicted.c_edge),
            "total": (verify_supermagic(spec, total), predicted.c_total),
        }
        for kind, (report, expected) in reports.items():
            if not (report.magic and report.bijective and report.magic_sum == expected):
                print(f"MISMATCH {spec.dims} {kind}: {report}", file=sys.stderr)
                return 1
        size = spec.vertex_count + spec.edge_count
        if size > largest[0]:
            largest = (size, spec.dims)
        if args.verbose:
            print(
                f"[{index + 1:>4}/{len(specs)}] dims={spec.dims} "
                f"elements={size} sums=({predicted.c_vertex},{predicted.c_edge},{predicted.c_total})"
            )
    elapsed = time.perf_counter() - start
    print(
        f"{len(specs)} specs verified against closed forms in {elapsed:.1f}s "
        f"(largest: {largest[1]}, {largest[0]} elements)"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
