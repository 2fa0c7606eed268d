"""
Modèle de réseau, validation, ordre topologique et flots unitaires.
"""
from .model import Channel, Network, PathCollection, imaginary_channel_ids
from .graph import ValidationReport, Violation, topological_order, validate_network
from .flow import (
    check_rate,
    find_disjoint_paths,
    min_cut_capacity,
    select_min_internal_paths,
    select_paths,
    summarize_network,
)

__all__ = [
    'Channel',
    'Network',
    'PathCollection',
    'imaginary_channel_ids',
    'ValidationReport',
    'Violation',
    'topological_order',
    'validate_network',
    'check_rate',
    'find_disjoint_paths',
    'min_cut_capacity',
    'select_min_internal_paths',
    'select_paths',
    'summarize_network',
]
