"""The random simple-homotopy main loop.

One run alternates three kinds of composite moves on a complex of current
top dimension d:

* (C)  random elementary collapses until no free face is left,
* (E)+(CC) a pure elementary (d+1)-expansion: glue a (d+1)-simplex onto an
  induced pure d-ball on d+2 vertices, then immediately collapse the new
  top simplex with one of the ball's old facets (the new facets are banned
  as free faces for that one collapse, so the expansion is not undone),
* (S)  a stellar subdivision of a random top facet, used only when no
  expansion candidate exists; these steps are counted against max_step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complexes import Complex, Simplex, boundary_facets


@dataclass(frozen=True)
class BallDescriptor:
    """A pure d-ball on d+2 vertices detected inside a complex.

    `sigma` is the (d+1)-simplex on all the vertices, `facets` are the k
    maximal d-faces already present, and `base` is their common face;
    the ball is base * boundary(complement of base in sigma).
    """

    sigma: Simplex
    facets: tuple[Simplex, ...]
    base: Simplex

    @property
    def vertices(self) -> Simplex:
        return self.sigma

    @property
    def k(self) -> int:
        return len(self.facets)


@dataclass
class RshtConfig:
    max_step: int = 10
    total_expansion_cap: int = 10_000
    seed: int = 0
    policy: str = "global"        # candidate selection: "global" or "local"
    choose_free: str = "pairs"    # uniform over free "pairs" or free "faces"
    trace: bool = False

    def __post_init__(self):
        if self.max_step < 1:
            raise ValueError("max_step must be >= 1")
        if self.total_expansion_cap < self.max_step:
            raise ValueError("total_expansion_cap must be >= max_step")
        if self.policy not in ("global", "local"):
            raise ValueError(f"unknown candidate policy {self.policy!r}")
        if self.choose_free not in ("pairs", "faces"):
            raise ValueError(f"unknown free-face policy {self.choose_free!r}")


@dataclass
class RunReport:
    expansions: int = 0
    subdivisions: int = 0
    collapses: int = 0
    final_f: tuple[int, ...] = ()
    reduced_to_point: bool = False
    move_trace: list = field(default_factory=list)

    def as_row(self, round_index: int) -> dict:
        return {
            "round": round_index,
            "expansions": self.expansions,
            "subdivisions": self.subdivisions,
            "collapses": self.collapses,
            "reduced_to_point": self.reduced_to_point,
            "final_f": " ".join(map(str, self.final_f)),
        }


@dataclass
class BatchReport:
    rounds: int
    seed: int
    reports: list[RunReport]

    @property
    def expansion_counts(self) -> list[int]:
        return [r.expansions for r in self.reports]

    @property
    def min_expansions(self) -> int:
        return min(self.expansion_counts)

    @property
    def max_expansions(self) -> int:
        return max(self.expansion_counts)

    @property
    def mean_expansions(self) -> float:
        return sum(self.expansion_counts) / self.rounds

    @property
    def success_rate(self) -> float:
        return sum(r.reduced_to_point for r in self.reports) / self.rounds

    def summary(self) -> dict:
        return {
            "rounds": self.rounds,
            "seed": self.seed,
            "min_expansions": self.min_expansions,
            "mean_expansions": self.mean_expansions,
            "max_expansions": self.max_expansions,
            "min_subdivisions": min(r.subdivisions for r in self.reports),
            "mean_subdivisions": sum(r.subdivisions for r in self.reports) / self.rounds,
            "success_rate": self.success_rate,
        }


# -- ball detection --------------------------------------------------------


def is_pure_ball(K: Complex, vertex_set, d: int) -> BallDescriptor | None:
    """Check whether the subcomplex induced on d+2 vertices is a pure d-ball.

    The induced complex is a ball exactly when k of the d-faces of the
    would-be (d+1)-simplex are present, 1 <= k <= d+1, and no induced face
    contains all k of their opposite vertices (which would either fill the
    missing region or stick out of the union of the k facets).
    """
    sigma = tuple(sorted(vertex_set))
    if len(sigma) != d + 2:
        raise ValueError(f"need d+2 = {d + 2} vertices, got {len(sigma)}")
    opposite = [v for v in sigma if tuple(x for x in sigma if x != v) in K]
    k = len(opposite)
    if k == 0 or k == d + 2:
        # nothing to glue along, or the full sphere boundary(sigma)
        return None
    base = tuple(v for v in sigma if v not in opposite)
    # purity: no induced face may contain every opposite vertex; by downward
    # closure it is enough to test the set of opposite vertices itself
    if tuple(opposite) in K:
        return None
    facets = tuple(sorted(tuple(x for x in sigma if x != v) for v in opposite))
    return BallDescriptor(sigma=sigma, facets=facets, base=base)


def enumerate_expansion_candidates(K: Complex, around: Simplex | None = None
                                   ) -> list[BallDescriptor]:
    """All pure induced d-balls on d+2 vertices spanned by a pair of adjacent
    top-dimensional facets.

    With `around` given, only pairs involving that facet are examined (the
    local selection policy).
    """
    d = K.dimension()
    if d < 1:
        return []
    found: dict[Simplex, BallDescriptor] = {}
    top = [around] if around is not None else K.facets(dim=d)
    for rho in top:
        for ridge in boundary_facets(rho):
            for rho2 in K.cofaces(ridge):
                if rho2 == rho:
                    continue
                V = sorted(set(rho) | set(rho2))
                if len(V) != d + 2:
                    continue
                sigma = tuple(V)
                if sigma in found or sigma in K:
                    continue
                ball = is_pure_ball(K, V, d)
                if ball is not None:
                    found[sigma] = ball
    return [found[s] for s in sorted(found)]


# -- composite moves -------------------------------------------------------


def collapse_until_stuck(K: Complex, rng: random.Random,
                         choose_free: str = "pairs",
                         trace: list | None = None) -> int:
    """Perform uniformly random elementary collapses until none is possible.

    Returns the number of collapses. The free-pair set is maintained
    incrementally between collapses.
    """
    free = {f: next(iter(up)) for f, up in K._cofaces.items() if len(up) == 1}
    count = 0
    while free:
        # a free face determines its unique coface, so sampling uniformly
        # over free faces and over free pairs coincide; the flag is kept
        # for config echo compatibility
        tau = rng.choice(sorted(free))
        sigma = free[tau]
        K.collapse(tau, sigma)
        count += 1
        if trace is not None:
            trace.append(("C", tau, sigma))
        free.pop(tau)
        free.pop(sigma, None)
        touched = set(boundary_facets(sigma)) | set(boundary_facets(tau))
        touched.discard(tau)
        for b in touched:
            if b not in K:
                continue
            up = K.cofaces(b)
            if len(up) == 1:
                free[b] = next(iter(up))
            else:
                free.pop(b, None)
    return count


def pure_expansion_step(K: Complex, ball: BallDescriptor, rng: random.Random,
                        trace: list | None = None) -> None:
    """(E) glue ball.sigma onto K, then (CC) collapse it with one old facet.

    The facets of sigma that were not present before the expansion are
    banned as free faces for the (CC) collapse, so the move cannot be
    undone on the spot; the ban dies with sigma.
    """
    sigma = ball.sigma
    if sigma in K:
        raise ValueError(f"{sigma} is already present; stale descriptor")
    for f in ball.facets:
        if f not in K or K.cofaces(f):
            raise ValueError(
                f"descriptor for {sigma} is stale: {f} is no longer a facet")
    K.insert_simplex(sigma)
    if trace is not None:
        trace.append(("E", sigma))
    tau = rng.choice(sorted(ball.facets))
    K.collapse(tau, sigma)
    if trace is not None:
        trace.append(("CC", tau, sigma))


def subdivision_step(K: Complex, facet: Simplex, rng: random.Random,
                     trace: list | None = None) -> int:
    """(S) stellar subdivision of a top facet: (E)+(CC) on a k=1 ball whose
    apex is a fresh vertex. Returns the new vertex label."""
    facet = tuple(facet)
    if facet not in K or K.cofaces(facet):
        raise ValueError(f"{facet} is not a maximal face")
    if len(facet) - 1 != K.dimension():
        raise ValueError(f"{facet} is not top-dimensional")
    v = max(K.vertices()) + 1
    ball = BallDescriptor(sigma=tuple(sorted(facet + (v,))),
                          facets=(facet,), base=facet)
    pure_expansion_step(K, ball, rng, trace)
    return v


# -- the outer loop --------------------------------------------------------


def rsht_run(K: Complex, cfg: RshtConfig, rng: random.Random | None = None
             ) -> RunReport:
    """Run RSHT in place on K and return the run report.

    The loop stops when the complex reaches dimension 0, when the
    subdivision budget max_step is exhausted and no expansion candidate
    exists, or when the total (E)+(S) safety cap is hit.
    """
    if rng is None:
        rng = random.Random(cfg.seed)
    report = RunReport()
    trace = report.move_trace if cfg.trace else None
    i = 0
    while K.dimension() != 0:
        report.collapses += collapse_until_stuck(K, rng, cfg.choose_free, trace)
        if K.dimension() == 0:
            break
        if report.expansions + report.subdivisions >= cfg.total_expansion_cap:
            break
        candidates = _select_candidates(K, cfg, rng)
        if candidates:
            ball = rng.choice(candidates)
            pure_expansion_step(K, ball, rng, trace)
            report.expansions += 1
        else:
            if i >= cfg.max_step:
                break
            facet = rng.choice(K.facets(dim=K.dimension()))
            subdivision_step(K, facet, rng, trace)
            report.subdivisions += 1
            i += 1
    report.final_f = K.f_vector()
    report.reduced_to_point = report.final_f == (1,)
    return report


def _select_candidates(K: Complex, cfg: RshtConfig, rng: random.Random
                       ) -> list[BallDescriptor]:
    if cfg.policy == "global":
        return enumerate_expansion_candidates(K)
    # local policy: pick a random top facet, scan only its neighbours, and
    # fall back to a global scan so the (S) branch is entered exactly when
    # no candidate exists anywhere
    rho = rng.choice(K.facets(dim=K.dimension()))
    local = enumerate_expansion_candidates(K, around=rho)
    if local:
        return local
    return enumerate_expansion_candidates(K)


def rsht_batch(K: Complex, rounds: int, cfg: RshtConfig,
               n_jobs: int = 1) -> BatchReport:
    """Run `rounds` independent seeded rounds of RSHT on clones of K.

    Round j uses the RNG stream seeded by (cfg.seed, j), so the batch
    result is reproducible regardless of scheduling.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if n_jobs != 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            reports = list(pool.map(
                _batch_round, ((K, cfg, j) for j in range(rounds)),
                chunksize=max(1, rounds // (8 * n_jobs))))
    else:
        reports = [_batch_round((K, cfg, j)) for j in range(rounds)]
    return BatchReport(rounds=rounds, seed=cfg.seed, reports=reports)


def _batch_round(args) -> RunReport:
    K, cfg, j = args
    rng = random.Random((cfg.seed << 32) ^ j)
    return rsht_run(K.clone(), cfg, rng)
