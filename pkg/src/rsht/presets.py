"""Batch experiment presets and their report plumbing.

A preset bundles an input (generator or facet file), optional
preprocessing (facet deletion, a random flip walk, a product with a
second complex), an RSHT configuration, a round count, and one-sided
expected outcomes. Running a preset produces a CSV of per-round rows, a
JSON summary, and append-only NDJSON log entries; expectation failures
raise with a readable diff.
"""

from __future__ import annotations

import csv
import datetime
import json
import random
from dataclasses import dataclass, field

from .complexes import Complex
from .engine import BatchReport, RshtConfig, RunReport, rsht_run
from .generators import GENERATORS, cross_product, random_flip_walk
from .homology import homology
from .io import parse_facet_file


class PresetError(Exception):
    """Unresolvable preset input (missing file, unknown generator)."""


class ExpectationFailure(Exception):
    """An expected outcome did not hold; the message carries the diff."""


@dataclass
class ExperimentPreset:
    """A reproducible batch experiment."""

    name: str
    generator: str | None = None
    params: dict = field(default_factory=dict)
    input_path: str | None = None
    # each step is ("delete-facet", facet-or-None), ("flip-walk", steps)
    # or ("product", generator-name, params)
    preprocess: list = field(default_factory=list)
    rounds: int = 100
    config: RshtConfig = field(default_factory=RshtConfig)
    # one-sided expectations; stochastic means are reported, not asserted
    expect: dict = field(default_factory=dict)

    def resolve_input(self) -> Complex:
        if self.input_path is not None:
            try:
                K = parse_facet_file(self.input_path)
            except OSError as exc:
                raise PresetError(
                    f"preset {self.name}: cannot read {self.input_path}: {exc}")
        elif self.generator is not None:
            if self.generator not in GENERATORS:
                raise PresetError(
                    f"preset {self.name}: unknown generator {self.generator!r}")
            K = GENERATORS[self.generator](**self.params).complex
        else:
            raise PresetError(f"preset {self.name}: no input source")
        for step in self.preprocess:
            K = apply_preprocess(K, step)
        return K


def apply_preprocess(K: Complex, step) -> Complex:
    kind = step[0]
    if kind == "delete-facet":
        facet = step[1] if step[1] is not None else sorted(K.facets())[0]
        out = K.clone()
        out.remove_face(tuple(facet))
        return out
    if kind == "flip-walk":
        return random_flip_walk(K, step[1], random.Random(step[2] if len(step) > 2 else 0))
    if kind == "product":
        other = GENERATORS[step[1]](**(step[2] if len(step) > 2 else {})).complex
        return cross_product(K, other)
    raise PresetError(f"unknown preprocessing step {kind!r}")


# -- terminal-shape predicates ---------------------------------------------


def is_sphere_wedge(K: Complex) -> bool:
    """True if K is the boundary of a tetrahedron with a (possibly empty)
    1-dimensional complex attached."""
    triangles = sorted(K.faces(2))
    if len(triangles) != 4 or any(len(f) > 3 for f in K.facets()):
        return False
    verts = set()
    for t in triangles:
        verts.update(t)
    if len(verts) != 4:
        return False
    return sorted(triangles) == sorted(
        tuple(sorted(verts - {v})) for v in verts)


def one_complex_size(K: Complex) -> int:
    """Number of edges of K not contained in any triangle."""
    return sum(1 for e in K.faces(1) if not K.cofaces(e))


def is_torus_like(K: Complex) -> bool:
    """True if K is 2-dimensional with Euler characteristic 0 and the
    reduced homology of the torus."""
    if K.dimension() != 2 or K.euler_characteristic() != 0:
        return False
    h = homology(K)
    return h.betti == (0, 2, 1) and not any(h.torsion)


# -- running ---------------------------------------------------------------


def run_preset(preset: ExperimentPreset, out_prefix=None, log_path=None):
    """Run a preset; returns (BatchReport, summary dict, final complexes).

    Writes <out_prefix>.csv and <out_prefix>.json when a prefix is given
    and appends NDJSON entries to log_path. Raises ExpectationFailure
    with a diff when an expected outcome does not hold.
    """
    K = preset.resolve_input()
    cfg = preset.config
    reports: list[RunReport] = []
    finals: list[Complex] = []
    keep_finals = any(k in preset.expect
                      for k in ("terminal_shape", "some_round_torus"))
    for j in range(preset.rounds):
        rng = random.Random((cfg.seed << 32) ^ j)
        work = K.clone()
        reports.append(rsht_run(work, cfg, rng))
        if keep_finals:
            finals.append(work)
    batch = BatchReport(rounds=preset.rounds, seed=cfg.seed, reports=reports)
    summary = dict(batch.summary())
    summary["preset"] = preset.name
    summary["input_f"] = list(K.f_vector())

    if "terminal_shape" in preset.expect and preset.expect["terminal_shape"] == "sphere-wedge":
        bad = [j for j, F in enumerate(finals) if not is_sphere_wedge(F)]
        if bad:
            raise ExpectationFailure(
                f"preset {preset.name}: rounds {bad[:5]} did not end on a "
                f"tetrahedron boundary with a 1-complex attached; first "
                f"offending f-vector {finals[bad[0]].f_vector()}")
        summary["mean_one_complex_edges"] = (
            sum(one_complex_size(F) for F in finals) / len(finals))
    if preset.expect.get("some_round_torus"):
        hits = [j for j, F in enumerate(finals) if is_torus_like(F)]
        if not hits:
            seen = min(
                (sum(F.f_vector()), list(F.f_vector())) for F in finals)[1]
            raise ExpectationFailure(
                f"preset {preset.name}: no round reached a 2-complex with "
                f"torus homology; smallest terminal f-vector {seen}")
        best = min((sum(finals[j].f_vector()), j) for j in hits)[1]
        summary["torus_rounds"] = len(hits)
        summary["best_torus_f"] = list(finals[best].f_vector())
    if preset.expect.get("all_reduced") and batch.success_rate != 1.0:
        failed = [j for j, r in enumerate(reports) if not r.reduced_to_point]
        raise ExpectationFailure(
            f"preset {preset.name}: expected every round to reduce to a "
            f"point, but rounds {failed[:10]} did not "
            f"(success rate {batch.success_rate:.3f})")
    if "min_expansions_at_most" in preset.expect:
        bound = preset.expect["min_expansions_at_most"]
        if batch.min_expansions > bound:
            raise ExpectationFailure(
                f"preset {preset.name}: expected minimum expansion count "
                f"<= {bound}, observed {batch.min_expansions}")

    if out_prefix is not None:
        write_csv(batch, f"{out_prefix}.csv")
        with open(f"{out_prefix}.json", "w") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if log_path is not None:
        append_run_log(log_path, preset, batch)
    return batch, summary, finals


CSV_FIELDS = ["round", "expansions", "subdivisions", "collapses",
              "reduced_to_point", "final_f"]


def write_csv(batch: BatchReport, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for j, report in enumerate(batch.reports):
            writer.writerow(report.as_row(j))


def append_run_log(path, preset: ExperimentPreset, batch: BatchReport) -> None:
    """Append one NDJSON entry per round; replaying a logged seed with
    rsht_run reproduces the logged report."""
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    with open(path, "a") as fh:
        for j, report in enumerate(batch.reports):
            entry = {"timestamp": stamp, "preset": preset.name,
                     "seed": batch.seed, **report.as_row(j)}
            fh.write(json.dumps(entry, sort_keys=True) + "\n")


# -- bundled presets -------------------------------------------------------


def builtin_presets() -> dict[str, ExperimentPreset]:
    return {
        "dunce-hat": ExperimentPreset(
            name="dunce-hat", generator="dunce-hat", rounds=1000,
            config=RshtConfig(max_step=5, total_expansion_cap=500, seed=0),
            expect={"all_reduced": True, "min_expansions_at_most": 2}),
        "abalone": ExperimentPreset(
            name="abalone", generator="abalone", rounds=100,
            config=RshtConfig(max_step=5, total_expansion_cap=2000, seed=0),
            expect={"all_reduced": True}),
        "bing-house": ExperimentPreset(
            name="bing-house", generator="bing-house", rounds=20,
            config=RshtConfig(max_step=5, total_expansion_cap=2000, seed=0),
            expect={"all_reduced": True}),
        "sphere-wedge": ExperimentPreset(
            name="sphere-wedge", generator="sphere", params={"n": 2},
            preprocess=[("product", "circle", {"n": 3}),
                        ("delete-facet", None)],
            rounds=100,
            config=RshtConfig(max_step=1, total_expansion_cap=2000, seed=0),
            expect={"terminal_shape": "sphere-wedge"}),
        "torus-interval": ExperimentPreset(
            name="torus-interval", generator="torus",
            preprocess=[("product", "interval", {"m": 10})],
            rounds=100,
            config=RshtConfig(max_step=1, total_expansion_cap=2000, seed=0),
            expect={"some_round_torus": True}),
    }
