"""Agreement-protocol vector fields.

Two nonlinear protocols plus the linear baseline:

  P1:     u_i = sig(sum_j a_ij (x_j - x_i), alpha)
  P2:     u_i = sum_j a_ij sig(x_j - x_i, alpha)
  Linear: u_i = sum_j a_ij (x_j - x_i)          (alpha = 1)
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import AlphaOutOfRange, DimensionMismatch, DisconnectedTopology
from .graph import Topology, is_connected


class ProtocolKind(str, Enum):
    P1 = "p1"
    P2 = "p2"
    LINEAR = "linear"


@dataclass(frozen=True)
class ProtocolSpec:
    kind: ProtocolKind
    alpha: float = 1.0

    def __post_init__(self):
        if self.kind is ProtocolKind.LINEAR:
            if self.alpha != 1.0:
                raise AlphaOutOfRange("linear protocol requires alpha == 1")
        elif not 0.0 < self.alpha < 1.0:
            # alpha = 0 gives discontinuous dynamics; alpha = 1 is Linear.
            raise AlphaOutOfRange(
                f"{self.kind.value} requires alpha in (0,1), got {self.alpha}"
            )


def sig(r, alpha: float):
    """sign(r) * |r|**alpha, exactly odd, exactly zero at r = 0.

    Works on scalars and arrays. Computing the power on |r| and applying
    the sign afterwards keeps sig(-r) == -sig(r) bit-exactly, which is
    what preserves the P2 state-sum to roundoff.
    """
    if not 0.0 < alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha must be in (0,1], got {alpha}")
    r = np.asarray(r, dtype=float)
    out = np.sign(r) * np.abs(r) ** alpha
    return out if out.ndim else float(out)


def _check_dims(t: Topology, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (t.n,):
        raise DimensionMismatch(f"state has shape {x.shape}, topology has n={t.n}")
    return x


def protocol1_field(t: Topology, x, alpha: float) -> np.ndarray:
    """P1 velocities: the sig nonlinearity wraps each aggregated sum."""
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must be in (0,1), got {alpha}")
    x = _check_dims(t, x)
    # Sum the weighted differences directly so constant states give an
    # exact zero field (an equilibrium, not a roundoff residue).
    inner = (t.weights * (x[None, :] - x[:, None])).sum(axis=1)
    return sig(inner, alpha)


def protocol2_field(t: Topology, x, alpha: float) -> np.ndarray:
    """P2 velocities: sig applied per edge, then weighted-summed.

    Each edge contributes an exactly antisymmetric pair of terms, so the
    total velocity sums to zero up to roundoff.
    """
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must be in (0,1), got {alpha}")
    x = _check_dims(t, x)
    diffs = x[None, :] - x[:, None]
    return (t.weights * sig(diffs, alpha)).sum(axis=1)


def linear_field(t: Topology, x) -> np.ndarray:
    """Linear baseline u = -L(A) x."""
    x = _check_dims(t, x)
    return (t.weights * (x[None, :] - x[:, None])).sum(axis=1)


def field(spec: ProtocolSpec, t: Topology, x) -> np.ndarray:
    """Dispatch to the vector field selected by spec."""
    if spec.kind is ProtocolKind.P1:
        return protocol1_field(t, x, spec.alpha)
    if spec.kind is ProtocolKind.P2:
        return protocol2_field(t, x, spec.alpha)
    return linear_field(t, x)


def is_equilibrium(t: Topology, x, p: ProtocolSpec, tol: float) -> bool:
    """Whether the vector field vanishes (inf-norm <= tol) at x.

    Only meaningful on connected graphs, where the equilibria are exactly
    the agreement states; disconnected input is refused so the result is
    never misread as agreement.
    """
    if not is_connected(t):
        raise DisconnectedTopology("equilibrium test requires a connected graph")
    u = field(p, t, np.asarray(x, dtype=float))
    return float(np.abs(u).max()) <= tol
