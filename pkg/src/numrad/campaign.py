"""Seeded fuzz campaigns: soundness of every bound plus the pointwise suite.

One CSV row per trial.  Trials are seeded independently through
splitmix64, so output is byte-identical for a fixed config regardless of
how trials are scheduled.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from . import pointwise
from .bounds import CATALOG_IDS, compare_all
from .ensembles import sample, trial_rng
from .matrix import adjoint
from .polar import T_MIN, abs_value
from .radius import splitmix64

DEFAULT_TOLERANCES = {
    "slack": 1e-7,       # bound soundness vs the sweep omega
    "pointwise": 1e-9,   # scalar inequality margins
    "amer": 1e-5,        # spectral radius side is Gelfand-approximate
}

POINTWISE_NAMES = ("kato", "mccarthy", "schwarz-covariance", "schwarz-self",
                   "cs-refinement", "amer", "log-convexity",
                   "log-convexity-midpoint")

CSV_COLUMNS = ("trial", "seed", "omega") + CATALOG_IDS + ("min_slack",
                                                          "violations")


@dataclass(frozen=True)
class CampaignConfig:
    ensemble: str
    dim: int
    trials: int
    seed: int
    t_grid: int = 9
    theta_grid: int = 240
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.dim < 1:
            raise ValueError("dim must be at least 1")


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _pointwise_violations(a, rng, tolerances) -> list[str]:
    n = a.shape[0]
    tol = tolerances["pointwise"]
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    b, c, d = (sample("ginibre", n, rng) for _ in range(3))
    t = rng.uniform(T_MIN, 1 - T_MIN)
    r = rng.uniform(0.05, 3.0)
    s, u = sorted(rng.uniform(0.05, 1.0, size=2))
    p = abs_value(a)
    q = abs_value(adjoint(a))
    checks = [
        ("kato", pointwise.kato(a, x, y, t), tol),
        ("mccarthy", pointwise.mccarthy(a.conj().T @ a, x, r), tol),
        ("schwarz-covariance", pointwise.schwarz_covariance(a, b, x), tol),
        ("schwarz-self", pointwise.schwarz_self(a, x), tol),
        ("cs-refinement", pointwise.cs_refinement(a, b, x), tol),
        ("amer", pointwise.amer_bound(a, b, c, d), tolerances["amer"]),
        ("log-convexity", pointwise.log_convexity(p, q, t), tol),
        ("log-convexity-midpoint",
         pointwise.log_convexity_midpoint(p, q, s, u), tol),
    ]
    return [name for name, chk, ctol in checks if chk.margin < -ctol]


def run_trial(config: CampaignConfig, index: int) -> str:
    """Compute one CSV row (no trailing newline)."""
    trial_seed = splitmix64(config.seed, index)
    rng = trial_rng(config.seed, index)
    a = sample(config.ensemble, config.dim, rng)
    report = compare_all(a, t_grid=config.t_grid,
                         theta_grid=config.theta_grid, refine=False)
    tol_slack = config.tolerances["slack"]
    by_id = {bv.id: bv for bv in report.bounds}
    violations = [bid for bid in CATALOG_IDS
                  if report.slacks.get(bid, 0.0) < -tol_slack
                  or not np.isfinite(by_id[bid].value)]
    violations += _pointwise_violations(a, rng, config.tolerances)
    finite = [s for s in report.slacks.values() if np.isfinite(s)]
    min_slack = min(finite) if finite else float("nan")
    cells = [str(index), str(trial_seed), _fmt(report.omega.value)]
    cells += [_fmt(by_id[bid].value) for bid in CATALOG_IDS]
    cells += [_fmt(min_slack), ";".join(violations)]
    return ",".join(cells)


def run_campaign(config: CampaignConfig, jobs: int = 1):
    """Run all trials; returns (csv_lines, violation_count).

    csv_lines includes the header row.  Aggregation preserves trial
    order, so output is deterministic for a fixed config.
    """
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(partial(run_trial, config),
                                 range(config.trials), chunksize=4))
    else:
        rows = [run_trial(config, i) for i in range(config.trials)]
    violation_count = sum(1 for r in rows if r.rsplit(",", 1)[1] != "")
    return [",".join(CSV_COLUMNS)] + rows, violation_count
