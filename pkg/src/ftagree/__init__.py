"""Finite-time state agreement for multi-agent systems.

Library + CLI: two nonlinear consensus protocols with finite settling
time, closed-form convergence bounds, a switching-topology RK4
simulator, and tooling that reproduces the published six-agent example.
"""

from .bounds import (
    BoundsReport,
    DisagreementDecomposition,
    disagreement,
    envelope,
    k1_constant,
    k2_constant,
    lemma1_constant,
    t1_bound,
    t1_limit_alpha0,
    t2_bound,
    t3_bound,
    v1,
    v2,
)
from .engine import (
    Sample,
    Scenario,
    SwitchingSchedule,
    Trajectory,
    conservation_drift,
    integrate,
    observed_convergence_time,
    topology_at,
    verify_envelope,
)
from .graph import (
    Topology,
    complete_topology,
    cycle_topology,
    exponent_transform,
    is_connected,
    laplacian,
    path_topology,
    topology_new,
)
from .protocols import (
    ProtocolKind,
    ProtocolSpec,
    field,
    is_equilibrium,
    linear_field,
    protocol1_field,
    protocol2_field,
    sig,
)
from .reconstruct import reconstruct_paper_graph
from .scenario import parse_scenario, render_scenario
from .spectral import (
    SpectrumResult,
    algebraic_connectivity,
    eigenvalues_symmetric,
    rayleigh_bound_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
