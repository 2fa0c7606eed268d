"""
Simulation du codage réseau linéaire aléatoire : essais, Monte Carlo et
énumération exacte.
"""
from .results import ExactResult, MonteCarloResult, TrialOutcome, confidence_interval, z_value
from .engine import (
    CodingEngine,
    KernelAssignment,
    count_free_coefficients,
    decoding_matrix,
    propagate_kernels,
    run_trial,
    trial_rng,
)
from .montecarlo import monte_carlo
from .exhaustive import assignment_digits, enumerate_exact

__all__ = [
    'ExactResult',
    'MonteCarloResult',
    'TrialOutcome',
    'confidence_interval',
    'z_value',
    'CodingEngine',
    'KernelAssignment',
    'count_free_coefficients',
    'decoding_matrix',
    'propagate_kernels',
    'run_trial',
    'trial_rng',
    'monte_carlo',
    'assignment_digits',
    'enumerate_exact',
]
