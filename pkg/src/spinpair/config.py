"""Global numerical tolerances.

Construction checks (unitarity, Hermiticity) default to 1e-10, derived
identities to 1e-9, and user-supplied matrix input to 1e-8.  All three can be
scaled together, which is what the CLI's --tol-scale flag does.
"""

from dataclasses import dataclass


@dataclass
class Tolerances:
    construction: float = 1e-10
    derived: float = 1e-9
    input_unitarity: float = 1e-8


tolerances = Tolerances()


def set_tol_scale(factor: float) -> None:
    """Reset all tolerances to their defaults scaled by ``factor``."""
    if factor <= 0:
        raise ValueError("tolerance scale must be positive")
    defaults = Tolerances()
    tolerances.construction = defaults.construction * factor
    tolerances.derived = defaults.derived * factor
    tolerances.input_unitarity = defaults.input_unitarity * factor
