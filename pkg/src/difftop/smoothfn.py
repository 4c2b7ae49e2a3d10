"""One-dimensional smoothing machinery and finite-difference smoothness checks.

The three profiles built here drive everything else in the package:

* ``gamma``  -- the classic flat-at-zero exponential, 0 for t <= 0 and
  exp(-1/t) for t > 0,
* ``lambda_fn`` -- the monotone step gamma(t)/(gamma(t)+gamma(1-t)),
  identically 0 below 0 and identically 1 above 1, with all derivatives
  vanishing at both ends,
* ``xi`` -- a strictly increasing reparameterization of [0,1] that is the
  identity near 0 and 1, fixes 1/3 and 2/3 while flattening every
  derivative there, and commutes with the reflection s -> 1-s.

``smoothness_check`` is the numerical surrogate for smoothness claims:
it estimates derivatives by central and one-sided finite differences on a
shrinking step ladder with Richardson extrapolation, and reports whether
the one-sided estimates agree (the derivative exists) or match a supplied
expected value (typically 0 for flatness claims).
"""

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "gamma", "gamma_deriv", "lambda_fn", "lambda_deriv", "lambda_inv",
    "xi", "xi_inv", "SmoothProfile", "GAMMA", "LAMBDA", "XI",
    "FDConfig", "SmoothnessReport", "smoothness_check",
    "fd_weights", "derivative_estimate", "EvaluationError",
]


def gamma(t):
    """Flat exponential: 0 for t <= 0, exp(-1/t) for t > 0."""
    if t <= 0.0:
        return 0.0
    return math.exp(-1.0 / t)


def gamma_deriv(t):
    """Closed-form first derivative of gamma."""
    if t <= 0.0:
        return 0.0
    return math.exp(-1.0 / t) / (t * t)


def lambda_fn(t):
    """Monotone smooth step: exactly 0 for t <= 0 and exactly 1 for t >= 1.

    Satisfies lambda_fn(1-t) = 1 - lambda_fn(t) for every t.
    """
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0
    g = gamma(t)
    return g / (g + gamma(1.0 - t))


def lambda_deriv(t):
    """Closed-form first derivative of lambda_fn (0 outside (0,1))."""
    if t <= 0.0 or t >= 1.0:
        return 0.0
    g, gc = gamma(t), gamma(1.0 - t)
    dg, dgc = gamma_deriv(t), gamma_deriv(1.0 - t)
    return (dg * gc + g * dgc) / (g + gc) ** 2


def _bisect_increasing(f, y, lo=0.0, hi=1.0, width=1e-14):
    # plain bisection; unconditionally correct for non-decreasing f
    flo = f(lo) - y
    if flo >= 0.0:
        return lo
    if f(hi) - y <= 0.0:
        return hi
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if f(mid) - y <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lambda_inv(y):
    """Inverse of lambda_fn restricted to [0,1] (bisection).

    lambda_fn collapses (-inf,0] to 0 and [1,inf) to 1; the representative
    returned here is the unique preimage inside [0,1].
    """
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"lambda_inv: y={y!r} outside [0,1]")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 1.0
    return _bisect_increasing(lambda_fn, y)


def xi(s):
    """Wrinkle profile: increasing, fixes [0,1/6] and [5/6,1] pointwise.

    On [1/3,2/3] equals lambda_fn(3s-1)/3 + 1/3, so every derivative
    vanishes at s = 1/3 and s = 2/3.  The gaps [1/6,1/3] and [2/3,5/6]
    are bridged by the blend s + lambda_fn(6s-1)*(1/3-s), whose value and
    derivatives of all orders match both neighbours at the junctions
    (lambda_fn is flat at 0 and 1); the upper gap is filled by the
    reflection xi(s) = 1 - xi(1-s).
    """
    if s <= 1.0 / 6.0 or s >= 5.0 / 6.0:
        return s
    if 1.0 / 3.0 <= s <= 2.0 / 3.0:
        return lambda_fn(3.0 * s - 1.0) / 3.0 + 1.0 / 3.0
    if s < 1.0 / 3.0:
        w = lambda_fn(6.0 * s - 1.0)
        return s + w * (1.0 / 3.0 - s)
    # 2/3 < s < 5/6: reflect the lower blend
    r = 1.0 - s
    w = lambda_fn(6.0 * r - 1.0)
    return 1.0 - (r + w * (1.0 / 3.0 - r))


def xi_inv(y):
    """Unique s in [0,1] with xi(s) = y, by bisection.

    xi has vanishing derivative at isolated points, so Newton-type
    inversion is unreliable; bisection is safe because xi is increasing.
    The bracket is shrunk to 1e-14, keeping inversion granularity well
    below the finite-difference noise floor of the seam checks.
    """
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"xi_inv: y={y!r} outside [0,1]")
    if y <= 1.0 / 6.0 or y >= 5.0 / 6.0:
        return y  # identity region, exact
    return _bisect_increasing(xi, y)


@dataclass(frozen=True)
class SmoothProfile:
    """A named scalar profile with optional closed-form derivatives.

    ``analytic_deriv_orders`` lists the derivative orders for which a
    closed form is wired in (order 0 is the value itself).  Higher orders
    are only ever estimated numerically.
    """
    name: str
    eval: callable
    deriv: callable = None
    analytic_deriv_orders: tuple = (0,)

    def __call__(self, t):
        return self.eval(t)


GAMMA = SmoothProfile("gamma", gamma, gamma_deriv, (0, 1))
LAMBDA = SmoothProfile("lambda", lambda_fn, lambda_deriv, (0, 1))
XI = SmoothProfile("xi", xi, None, (0,))


# ---------------------------------------------------------------------------
# Finite-difference derivative estimation
# ---------------------------------------------------------------------------

class EvaluationError(RuntimeError):
    """A stencil evaluation failed (exception or non-finite value)."""


def fd_weights(order, offsets):
    """Finite-difference weights for the given derivative order at 0.

    Fornberg's recursion on arbitrary nodes; ``offsets`` are in units of
    the step size.  Returns one weight per offset (to be divided by
    h**order after summing).
    """
    a = np.asarray(offsets, dtype=float)
    n = len(a)
    if n <= order:
        raise ValueError("need more than `order` stencil nodes")
    C = np.zeros((n, order + 1))
    C[0, 0] = 1.0
    c1 = 1.0
    c4 = a[0]
    for i in range(1, n):
        mn = min(i, order)
        c2 = 1.0
        c5 = c4
        c4 = a[i]
        for j in range(i):
            c3 = a[i] - a[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    C[i, k] = c1 * (k * C[i - 1, k - 1] - c5 * C[i - 1, k]) / c2
                C[i, 0] = -c1 * c5 * C[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                C[j, k] = (c4 * C[j, k] - k * C[j, k - 1]) / c3
            C[j, 0] = c4 * C[j, 0] / c3
        c1 = c2
    return C[:, order]


@dataclass(frozen=True)
class FDConfig:
    """Step ladder and tolerance for finite-difference smoothness checks.

    Five halvings of the base step reach h ~ 6e-4: deep enough that the
    exp(-1/t)-flat seams in this package have negligible truncation error
    at the finest level, while the order-3 round-off floor
    (eps * sum|weights| / h^3) stays a factor of ~3 below ``tol``.
    """
    base_step: float = 1e-2
    levels: int = 5
    tol: float = 1e-4
    max_order_cap: int = 6


_DEFAULT_FD = FDConfig()


def _stencil_offsets(order, side):
    # minimal stencils plus one node (accuracy 2); small coefficient sums
    # keep the round-off floor low on the fine ladder levels
    if side == 0:
        r = (order + 2) // 2
        return list(range(-r, r + 1))
    if side < 0:
        return [-i for i in range(order + 2)]
    return list(range(order + 2))


def _safe_eval(f, x):
    try:
        v = float(f(x))
    except Exception as exc:
        raise EvaluationError(f"evaluation failed at {x!r}: {exc}") from exc
    if not math.isfinite(v):
        raise EvaluationError(f"non-finite value {v!r} at {x!r}")
    return v


def derivative_estimate(f, x, order, side=0, config=None):
    """Estimate f^(order)(x) on a shrinking step ladder.

    ``side`` 0 uses a symmetric central stencil, -1/+1 one-sided stencils
    reaching only left/right of x.  Raw estimates at steps h, h/2, ... are
    Richardson-extrapolated (error series h^2, h^4, ... for central
    stencils, h^p, h^(p+1), ... one-sided) and the table entry with the
    smallest neighbour-disagreement is returned as ``(value, err)``.

    Raises EvaluationError if any stencil point cannot be evaluated.
    """
    cfg = config or _DEFAULT_FD
    offsets = _stencil_offsets(order, side)
    w = fd_weights(order, offsets)
    if side == 0:
        p, series = 2, 2  # symmetric: even error series
    else:
        p, series = len(offsets) - order, 1

    raw = []
    h = cfg.base_step
    for _ in range(cfg.levels):
        vals = [_safe_eval(f, x + o * h) for o in offsets]
        raw.append(float(np.dot(w, vals)) / h ** order)
        h *= 0.5

    # Neville/Richardson table with error tracking; the best entry wins.
    best, best_err = raw[0], math.inf
    for i in range(1, len(raw)):
        err = abs(raw[i] - raw[i - 1])
        if err < best_err:
            best, best_err = raw[i], err
    col = list(raw)
    for j in range(1, cfg.levels):
        fac = 2.0 ** (p + (j - 1) * series)
        nxt = []
        for i in range(1, len(col)):
            t = col[i] + (col[i] - col[i - 1]) / (fac - 1.0)
            err = max(abs(t - col[i]), abs(t - col[i - 1]))
            if err < best_err:
                best, best_err = t, err
            nxt.append(t)
        col = nxt
    return best, best_err


@dataclass
class SmoothnessReport:
    """Per-order derivative estimates and verdicts at a single point."""
    point: float
    max_order_tested: int
    tolerance_used: float
    fd_estimates: dict = field(default_factory=dict)   # order -> central estimate
    side_estimates: dict = field(default_factory=dict)  # order -> (left, right)
    verdicts: dict = field(default_factory=dict)       # order -> pass/fail/inconclusive
    deviations: dict = field(default_factory=dict)     # order -> measured disagreement

    @property
    def passed(self):
        return bool(self.verdicts) and all(v == "pass" for v in self.verdicts.values())

    @property
    def inconclusive(self):
        return any(v == "inconclusive" for v in self.verdicts.values())


def smoothness_check(f, point, max_order, config=None, expected=None):
    """Check existence (or expected values) of derivatives of f at a point.

    For each order 1..max_order the left- and right-sided estimates must
    agree within ``tol * max(1, |left|, |right|)`` plus twice the sum of
    their own uncertainty estimates; the allowance keeps smooth functions
    with violent higher derivatives (every profile here is built from
    exp(-1/t)) from flunking on truncation error, while a genuine kink
    leaves both estimators confident and far apart.  When ``expected``
    supplies a target for an order (e.g. 0 for a flatness claim), the
    central estimate must instead match it within ``tol * max(1, |target|)``
    plus the same kind of allowance.  Any stencil evaluation failure marks
    the order inconclusive -- an inconclusive report never counts as
    passing.
    """
    cfg = config or _DEFAULT_FD
    if max_order > cfg.max_order_cap:
        raise ValueError(f"max_order {max_order} exceeds cap {cfg.max_order_cap}")
    report = SmoothnessReport(point=float(point), max_order_tested=max_order,
                              tolerance_used=cfg.tol)
    for k in range(1, max_order + 1):
        try:
            central, err_c = derivative_estimate(f, point, k, side=0, config=cfg)
            left, err_l = derivative_estimate(f, point, k, side=-1, config=cfg)
            right, err_r = derivative_estimate(f, point, k, side=+1, config=cfg)
        except EvaluationError:
            report.verdicts[k] = "inconclusive"
            continue
        report.fd_estimates[k] = central
        report.side_estimates[k] = (left, right)
        if expected is not None and k in expected:
            target = expected[k]
            dev = abs(central - target)
            ok = dev <= cfg.tol * max(1.0, abs(target)) + 2.0 * err_c
        else:
            dev = abs(left - right)
            ok = dev <= cfg.tol * max(1.0, abs(left), abs(right)) + 2.0 * (err_l + err_r)
        report.deviations[k] = dev
        report.verdicts[k] = "pass" if ok else "fail"
    return report
