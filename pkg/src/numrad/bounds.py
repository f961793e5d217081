"""Catalog of numerical-radius upper bounds and their t-optimization.

Throughout, X = |A| and Y = |A*|.  Fractional powers of both are cheap
because they share the singular value decomposition of A, which is
computed once per context.  All bound evaluators return a BoundValue
whose value is directly comparable to omega(A); bounds stated in the
squared form record the pre-square-root quantity under detail["inner"].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonFinite, WeightOutOfRange
from .matrix import as_matrix
from .optimize import golden_min
from .polar import SIGMA_CUT_REL, T_MIN
from .radius import DEFAULT_GRID, DEFAULT_THETA_TOL, RadiusEstimate, radius_sweep

TOL_SLACK = 1e-7

CATALOG_IDS = (
    "classic", "kitt-sum", "kitt-square", "kitt-mixed", "integral",
    "integral-refined", "yamazaki", "aluthge-t", "aluthge-half",
    "weighted-power", "weighted-r", "product", "fourth-power",
    "schwarz-radius",
)
T_DEPENDENT_IDS = frozenset(
    {"aluthge-t", "weighted-power", "weighted-r", "product",
     "fourth-power", "schwarz-radius"})


@dataclass(frozen=True)
class WeightParams:
    t: float
    r_cap: float


def weight_params(t: float) -> WeightParams:
    if not T_MIN <= t <= 1 - T_MIN:
        raise WeightOutOfRange(f"t={t} outside [{T_MIN}, {1 - T_MIN}]")
    return WeightParams(t=float(t), r_cap=max(t, 1 - t))


@dataclass(frozen=True)
class BoundValue:
    id: str
    t_used: float | None
    value: float
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BoundReport:
    omega: RadiusEstimate
    bounds: list
    slacks: dict


class BoundContext:
    """Shared spectral data for evaluating many bounds on one matrix."""

    def __init__(self, a, theta_grid: int = DEFAULT_GRID,
                 theta_tol: float = DEFAULT_THETA_TOL,
                 theta_refine: bool = True):
        self.a = as_matrix(a)
        self.theta_grid = theta_grid
        self.theta_tol = theta_tol
        self.theta_refine = theta_refine
        u, s, vh = np.linalg.svd(self.a)
        self.sigma = s
        self._left = u
        self._right = vh.conj().T
        self.norm_a = float(s[0]) if s.size else 0.0
        cut = SIGMA_CUT_REL * self.norm_a
        keep = s > cut
        self.isometry = u[:, keep] @ self._right[:, keep].conj().T
        self._alu: dict[float, np.ndarray] = {}
        self._omega: dict = {}
        self._omega_a: RadiusEstimate | None = None

    def xpow(self, r: float) -> np.ndarray:
        """|A|^r (r > 0).  Overflowing powers propagate as non-finite."""
        return self._power(self._right, r)

    def ypow(self, r: float) -> np.ndarray:
        """|A*|^r (r > 0)."""
        return self._power(self._left, r)

    def _power(self, v: np.ndarray, r: float) -> np.ndarray:
        with np.errstate(over="ignore", invalid="ignore"):
            d = self.sigma**r
            m = (v * d) @ v.conj().T
            return (m + m.conj().T) / 2

    def aluthge_t(self, t: float) -> np.ndarray:
        m = self._alu.get(t)
        if m is None:
            m = self.xpow(1 - t) @ self.isometry @ self.xpow(t)
            self._alu[t] = m
        return m

    def sweep(self, key, m) -> float:
        v = self._omega.get(key)
        if v is None:
            v = radius_sweep(m, self.theta_grid, self.theta_tol,
                             self.theta_refine).value
            self._omega[key] = v
        return v

    @property
    def omega_estimate(self) -> RadiusEstimate:
        if self._omega_a is None:
            self._omega_a = radius_sweep(self.a, self.theta_grid,
                                         self.theta_tol, self.theta_refine)
        return self._omega_a

    @staticmethod
    def hnorm(m) -> float:
        """Spectral norm of a Hermitian operand via extreme eigenvalues."""
        if not np.all(np.isfinite(m)):
            return math.inf
        w = np.linalg.eigvalsh((m + m.conj().T) / 2)
        return float(max(abs(w[0]), abs(w[-1])))

    @staticmethod
    def gnorm(m) -> float:
        """Spectral norm of a general operand."""
        if not np.all(np.isfinite(m)):
            return math.inf
        return float(np.linalg.svd(m, compute_uv=False)[0])


def _classic(ctx: BoundContext, t=None) -> BoundValue:
    return BoundValue("classic", None, ctx.norm_a,
                      {"lower": ctx.norm_a / 2})


def _kitt_sum(ctx: BoundContext, t=None) -> BoundValue:
    v = 0.5 * ctx.hnorm(ctx.xpow(1.0) + ctx.ypow(1.0))
    return BoundValue("kitt-sum", None, v)


def _kitt_square(ctx: BoundContext, t=None) -> BoundValue:
    inner = 0.5 * ctx.hnorm(ctx.xpow(2.0) + ctx.ypow(2.0))
    return BoundValue("kitt-square", None, math.sqrt(inner), {"inner": inner})


def _kitt_mixed(ctx: BoundContext, t=None) -> BoundValue:
    norm_sq = ctx.gnorm(ctx.a @ ctx.a)
    v = 0.5 * (ctx.norm_a + math.sqrt(norm_sq))
    return BoundValue("kitt-mixed", None, v, {"norm_a_squared": norm_sq})


def _integral_operand(ctx: BoundContext) -> np.ndarray:
    x, y = ctx.xpow(1.0), ctx.ypow(1.0)
    xy = x @ y
    return (ctx.xpow(2.0) + ctx.ypow(2.0)) / 3 + (xy + xy.conj().T) / 6


def _integral(ctx: BoundContext, t=None) -> BoundValue:
    inner = ctx.hnorm(_integral_operand(ctx))
    return BoundValue("integral", None, math.sqrt(inner), {"inner": inner})


def _integral_refined(ctx: BoundContext, t=None) -> BoundValue:
    d = ctx.xpow(1.0) - ctx.ypow(1.0)
    inner = ctx.hnorm(_integral_operand(ctx) - d @ d / 48)
    return BoundValue("integral-refined", None, math.sqrt(inner),
                      {"inner": inner})


def _yamazaki(ctx: BoundContext, t=None) -> BoundValue:
    wa = ctx.sweep(("alu", 0.5), ctx.aluthge_t(0.5))
    return BoundValue("yamazaki", None, 0.5 * (ctx.norm_a + wa),
                      {"omega_aluthge": wa})


def _aluthge_half(ctx: BoundContext, t=None) -> BoundValue:
    alu = ctx.aluthge_t(0.5)
    wa = ctx.sweep(("alu", 0.5), alu)
    wa2 = ctx.sweep(("alu2", 0.5), alu @ alu)
    mod = alu.conj().T @ alu + alu @ alu.conj().T
    inner = (ctx.norm_a**2 + 0.25 * ctx.hnorm(mod) + 0.5 * wa2
             + 2 * ctx.norm_a * wa)
    return BoundValue("aluthge-half", None, 0.5 * math.sqrt(inner),
                      {"inner": inner, "omega_aluthge": wa,
                       "omega_aluthge_sq": wa2})


def _aluthge_weighted(ctx: BoundContext, t: float) -> BoundValue:
    alu = ctx.aluthge_t(t)
    wa = ctx.sweep(("alu", t), alu)
    wa2 = ctx.sweep(("alu2", t), alu @ alu)
    term_pow4 = 0.25 * ctx.hnorm(ctx.xpow(4 * t) + ctx.xpow(4 * (1 - t)))
    term_norm = 0.5 * ctx.norm_a**2
    term_mod = 0.25 * ctx.hnorm(alu.conj().T @ alu + alu @ alu.conj().T)
    term_sq = 0.5 * wa2
    term_cross = ctx.hnorm(ctx.xpow(2 * t) + ctx.xpow(2 * (1 - t))) * wa
    inner = term_pow4 + term_norm + term_mod + term_sq + term_cross
    detail = {"inner": inner, "term_pow4": term_pow4, "term_norm": term_norm,
              "term_mod": term_mod, "term_sq": term_sq,
              "term_cross": term_cross}
    value = 0.5 * math.sqrt(inner) if math.isfinite(inner) else math.inf
    return BoundValue("aluthge-t", t, value, detail)


def _weighted_power(ctx: BoundContext, t: float) -> BoundValue:
    with np.errstate(invalid="ignore", over="ignore"):
        m = (1 - t) * ctx.xpow(1 / (1 - t)) + t * ctx.ypow(1 / t)
    inner = ctx.hnorm(m)
    value = math.sqrt(inner) if math.isfinite(inner) else math.inf
    return BoundValue("weighted-power", t, value, {"inner": inner})


def _weighted_r(ctx: BoundContext, t: float) -> BoundValue:
    r_cap = max(t, 1 - t)
    d = ctx.xpow(1.0) - ctx.ypow(1.0)
    m = ctx.xpow(2.0) + ctx.ypow(2.0) - (t * (1 - t) / r_cap) * (d @ d)
    inner = 0.5 * ctx.hnorm(m)
    return BoundValue("weighted-r", t, math.sqrt(inner), {"inner": inner})


def _product(ctx: BoundContext, t: float) -> BoundValue:
    n1 = ctx.gnorm(ctx.xpow(t) @ ctx.ypow(t))
    n2 = ctx.gnorm(ctx.xpow(1 - t) @ ctx.ypow(1 - t))
    value = 0.5 * (ctx.norm_a + math.sqrt(n1 * n2))
    return BoundValue("product", t, value,
                      {"norm_t": n1, "norm_one_minus_t": n2})


def _fourth_power(ctx: BoundContext, t: float) -> BoundValue:
    with np.errstate(invalid="ignore", over="ignore"):
        m = ((ctx.xpow(4 * (1 - t)) + ctx.ypow(4 * t)) / 4
             + ((1 - t) * ctx.xpow(2.0) + t * ctx.ypow(2.0)) / 2)
    inner = ctx.hnorm(m)
    value = math.sqrt(inner) if math.isfinite(inner) else math.inf
    return BoundValue("fourth-power", t, value, {"inner": inner})


def _schwarz_radius(ctx: BoundContext, t: float) -> BoundValue:
    with np.errstate(invalid="ignore", over="ignore"):
        m = t * ctx.xpow(2 / t) + (1 - t) * ctx.ypow(2 / (1 - t))
    norm_m = ctx.hnorm(m)
    if not math.isfinite(norm_m):
        return BoundValue("schwarz-radius", t, math.inf, {"inner": math.inf})
    wa2 = ctx.sweep("a2", ctx.a @ ctx.a)
    inner = 0.5 * (math.sqrt(norm_m) + wa2)
    return BoundValue("schwarz-radius", t, math.sqrt(inner),
                      {"inner": inner, "omega_a_squared": wa2})


_EVALUATORS = {
    "classic": _classic,
    "kitt-sum": _kitt_sum,
    "kitt-square": _kitt_square,
    "kitt-mixed": _kitt_mixed,
    "integral": _integral,
    "integral-refined": _integral_refined,
    "yamazaki": _yamazaki,
    "aluthge-t": _aluthge_weighted,
    "aluthge-half": _aluthge_half,
    "weighted-power": _weighted_power,
    "weighted-r": _weighted_r,
    "product": _product,
    "fourth-power": _fourth_power,
    "schwarz-radius": _schwarz_radius,
}


# ---------------------------------------------------------------------------
# public single-bound evaluators

def classic_envelope(a):
    """Classic envelope (||A||/2, ||A||) bracketing omega(A)."""
    ctx = BoundContext(a)
    return ctx.norm_a / 2, ctx.norm_a


def kittaneh_sum(a) -> BoundValue:
    return _kitt_sum(BoundContext(a))


def kittaneh_square(a) -> BoundValue:
    return _kitt_square(BoundContext(a))


def kittaneh_mixed(a) -> BoundValue:
    return _kitt_mixed(BoundContext(a))


def integral_bound(a) -> BoundValue:
    return _integral(BoundContext(a))


def integral_refined(a) -> BoundValue:
    return _integral_refined(BoundContext(a))


def yamazaki(a) -> BoundValue:
    return _yamazaki(BoundContext(a))


def aluthge_half(a) -> BoundValue:
    return _aluthge_half(BoundContext(a))


def aluthge_weighted(a, w: WeightParams) -> BoundValue:
    return _aluthge_weighted(BoundContext(a), w.t)


def weighted_power(a, w: WeightParams) -> BoundValue:
    return _weighted_power(BoundContext(a), w.t)


def weighted_R(a, w: WeightParams) -> BoundValue:
    return _weighted_r(BoundContext(a), w.t)


def product_bound(a, w: WeightParams) -> BoundValue:
    return _product(BoundContext(a), w.t)


def fourth_power(a, w: WeightParams) -> BoundValue:
    return _fourth_power(BoundContext(a), w.t)


def schwarz_radius(a, w: WeightParams) -> BoundValue:
    return _schwarz_radius(BoundContext(a), w.t)


# ---------------------------------------------------------------------------
# t-optimization

def minimize_over_t(bound_id: str, a, grid_points: int = 1001,
                    refine_tol: float = 1e-8, *, refine: bool = True,
                    ctx: BoundContext | None = None):
    """Minimize a t-dependent bound over the clamped weight window.

    Grid scan over [T_MIN, 1 - T_MIN] followed by golden-section
    refinement around the best grid point.  Evaluations that overflow
    (the objective genuinely diverges when sigma_1 > 1 and the exponent
    blows up) are recorded as +inf and skipped.

    Returns (t_star, value) with value comparable to omega(A).
    """
    if bound_id not in T_DEPENDENT_IDS:
        raise ValueError(f"bound {bound_id!r} is not t-dependent")
    if ctx is None:
        ctx = BoundContext(a)
    f = _EVALUATORS[bound_id]
    ts = np.linspace(T_MIN, 1 - T_MIN, grid_points)
    vals = np.array([f(ctx, float(t)).value for t in ts])
    best = int(np.argmin(vals))
    if not math.isfinite(vals[best]):
        raise NonFinite(f"{bound_id}: all grid evaluations overflowed "
                        f"(e.g. t={ts[best]})")
    t_star, value = float(ts[best]), float(vals[best])
    if refine and grid_points > 1:
        lo = float(ts[max(best - 1, 0)])
        hi = float(ts[min(best + 1, grid_points - 1)])
        t_ref, v_ref, _ = golden_min(
            lambda t: f(ctx, float(t)).value, lo, hi, refine_tol)
        if v_ref < value:
            t_star, value = float(t_ref), float(v_ref)
    return t_star, value


def _minimized_bound(bound_id: str, ctx: BoundContext, grid_points: int,
                     refine_tol: float, refine: bool) -> BoundValue:
    t_star, _ = minimize_over_t(bound_id, None, grid_points, refine_tol,
                                refine=refine, ctx=ctx)
    return _EVALUATORS[bound_id](ctx, t_star)


def compare_all(a, t_grid: int = 1001, theta_grid: int = DEFAULT_GRID,
                refine_tol: float = 1e-8, refine: bool = True) -> BoundReport:
    """Evaluate the full catalog, minimizing t-dependent bounds.

    Per-bound failures are recorded in the bound's detail; the report is
    still produced.  Bounds are sorted ascending by value.  refine=False
    disables both the golden t-refinement and the theta refinement inside
    sweeps, for bulk campaigns where grid accuracy suffices.
    """
    ctx = BoundContext(a, theta_grid=theta_grid, theta_refine=refine)
    omega = ctx.omega_estimate
    bounds = []
    for bound_id in CATALOG_IDS:
        try:
            if bound_id in T_DEPENDENT_IDS:
                bv = _minimized_bound(bound_id, ctx, t_grid, refine_tol, refine)
            else:
                bv = _EVALUATORS[bound_id](ctx)
        except Exception as exc:  # aggregated per-bound, report survives
            bv = BoundValue(bound_id, None, math.nan, {"error": str(exc)})
        bounds.append(bv)
    slacks = {bv.id: bv.value - omega.value for bv in bounds
              if math.isfinite(bv.value)}
    bounds.sort(key=lambda bv: (math.isnan(bv.value), bv.value))
    return BoundReport(omega=omega, bounds=bounds, slacks=slacks)
