"""Four-spin phase-gate simulator and Leggett/Bell inequality toolkit."""

from .evolution import PhaseSet, ac_gate, evolve, pseudo_rotation
from .geometry import Layout, LineCharge, Path, ac_phase_analytic, ac_phase_numeric, winding
from .inequalities import (
    chsh_settings,
    chsh_value,
    leggett_bound,
    leggett_lhs,
    leggett_settings,
    leggett_violation,
    max_violation,
    violation_region,
)
from .measurement import (
    DegenerateNormalization,
    Setting,
    analytic_correlation,
    convention_report,
    joint_probabilities,
    normalized_correlation,
    operator_correlation,
)
from .spinstates import Direction, bloch_minus, bloch_plus, initial_state, singlet, triplet0

__version__ = "0.1.0"
