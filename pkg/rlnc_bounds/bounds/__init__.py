"""
Évaluation exacte des bornes sur la probabilité d'échec.
"""
from .report import BoundEntry, BoundReport
from .formulas import (
    bound_network_cutwise,
    bound_network_internal_count,
    bound_network_split,
    bound_sink_cutwise,
    bound_sink_simple,
    compute_a,
    cut_transition_probability,
    lower_bound_entries,
    lower_bound_value,
    lower_bounds,
    spanning_probability,
    split_path_sum,
)
from .asymptotics import SWEEP_BOUNDS, SweepResult, SweepRow, asymptotic_constants, asymptotic_sweep
from .analysis import analyze_network, plait_chain_lengths

__all__ = [
    'BoundEntry',
    'BoundReport',
    'bound_network_cutwise',
    'bound_network_internal_count',
    'bound_network_split',
    'bound_sink_cutwise',
    'bound_sink_simple',
    'compute_a',
    'cut_transition_probability',
    'lower_bound_entries',
    'lower_bound_value',
    'lower_bounds',
    'spanning_probability',
    'split_path_sum',
    'SWEEP_BOUNDS',
    'SweepResult',
    'SweepRow',
    'asymptotic_constants',
    'asymptotic_sweep',
    'analyze_network',
    'plait_chain_lengths',
]
