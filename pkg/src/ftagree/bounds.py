"""Closed-form Lyapunov quantities and convergence-time upper bounds.

The bound functions take scalars (initial Lyapunov value, algebraic
connectivity) rather than topologies, so the same code serves fixed
graphs, switching schedules, and literature-value reproduction.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AlphaOutOfRange, DimensionMismatch, DisconnectedTopology
from .graph import Topology


@dataclass(frozen=True)
class DisagreementDecomposition:
    """x = kappa * ones + delta with delta summing to zero."""

    kappa: float
    delta: np.ndarray


@dataclass(frozen=True)
class BoundsReport:
    v1_0: float
    v2_0: float
    lambda2_A: float
    lambda2_B: float
    t1: float
    t2: float
    t3: Optional[float]
    t1_limit_alpha0: float
    alpha: float


def lemma1_constant(n: int, p: float) -> float:
    """m(n, p) = min(n**(1-p), 1), the power-sum inequality constant.

    For any nonnegative y: sum(y_i**p) >= m(n, p) * (sum(y_i))**p.
    """
    if n < 1 or p <= 0:
        raise ValueError(f"need n >= 1 and p > 0, got n={n}, p={p}")
    return min(float(n) ** (1.0 - p), 1.0)


def v1(t: Topology, x) -> float:
    """Edge-energy Lyapunov value: quarter of the weighted double sum
    of squared state differences (equals half the Laplacian quadratic form)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (t.n,):
        raise DimensionMismatch(f"state has shape {x.shape}, topology has n={t.n}")
    diffs = x[None, :] - x[:, None]
    return float(0.25 * (t.weights * diffs * diffs).sum())


def disagreement(x) -> DisagreementDecomposition:
    """Split a state into its average and the zero-sum disagreement part."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 1:
        raise DimensionMismatch("state must be a nonempty vector")
    kappa = float(x.mean())
    return DisagreementDecomposition(kappa, x - kappa)


def v2(x) -> float:
    """Disagreement energy: half the squared norm of x minus its mean."""
    d = disagreement(x).delta
    return float(0.5 * (d * d).sum())


def _check_bound_args(v_0: float, lam2: float, alpha: float) -> None:
    if v_0 < 0:
        raise ValueError(f"initial Lyapunov value must be >= 0, got {v_0}")
    if lam2 <= 0:
        raise DisconnectedTopology(f"algebraic connectivity must be > 0, got {lam2}")
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must be in (0,1), got {alpha}")


def t1_bound(v1_0: float, lambda2_A: float, alpha: float) -> float:
    """Convergence-time upper bound for protocol 1."""
    _check_bound_args(v1_0, lambda2_A, alpha)
    if v1_0 == 0.0:
        return 0.0
    return (2.0 * v1_0) ** ((1.0 - alpha) / 2.0) / (
        (1.0 - alpha) * lambda2_A ** ((1.0 + alpha) / 2.0)
    )


def t1_limit_alpha0(v1_0: float, lambda2_A: float) -> float:
    """alpha -> 0 limit of the protocol-1 bound: sqrt(2 V1(0) / lam2)."""
    if v1_0 < 0:
        raise ValueError(f"initial Lyapunov value must be >= 0, got {v1_0}")
    if lambda2_A <= 0:
        raise DisconnectedTopology(
            f"algebraic connectivity must be > 0, got {lambda2_A}"
        )
    return math.sqrt(2.0 * v1_0 / lambda2_A)


def t2_bound(v2_0: float, lambda2_B: float, alpha: float) -> float:
    """Convergence-time upper bound for protocol 2 (average agreement).

    lambda2_B is the algebraic connectivity of the exponent-transformed
    graph, b_ij = a_ij**(2/(1+alpha)).
    """
    _check_bound_args(v2_0, lambda2_B, alpha)
    if v2_0 == 0.0:
        return 0.0
    return 2.0 ** (1.0 - alpha) * v2_0 ** ((1.0 - alpha) / 2.0) / (
        (1.0 - alpha) * lambda2_B ** ((1.0 + alpha) / 2.0)
    )


def t3_bound(v2_0: float, lambda_min: float, alpha: float) -> float:
    """Switching-topology bound: the protocol-2 formula with the minimum
    transformed connectivity over all scheduled graphs."""
    return t2_bound(v2_0, lambda_min, alpha)


def k1_constant(lambda2_A: float, alpha: float) -> float:
    """Decay constant for the protocol-1 envelope: (2 lam2)**((1+alpha)/2)."""
    return (2.0 * lambda2_A) ** ((1.0 + alpha) / 2.0)


def k2_constant(lambda2_B: float, alpha: float) -> float:
    """Decay constant for the protocol-2 envelope: 2**alpha * lam2B**((1+alpha)/2)."""
    return 2.0 ** alpha * lambda2_B ** ((1.0 + alpha) / 2.0)


def envelope(v_0: float, K: float, alpha: float, t: float) -> float:
    """Lyapunov decay envelope (v_0**q - K q t / ... ) clamped at zero.

    The base is clamped before exponentiation: the analytic bound is only
    stated before the hitting time, and clamping extends it continuously
    by zero afterwards.
    """
    if t < 0:
        raise ValueError("time must be >= 0")
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must be in (0,1), got {alpha}")
    q = (1.0 - alpha) / 2.0
    base = v_0 ** q - K * q * t
    if base <= 0.0:
        return 0.0
    return base ** (1.0 / q)
