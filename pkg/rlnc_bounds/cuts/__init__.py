"""
Construction des suites de coupes le long des chemins disjoints.
"""
from .sequences import (
    CutSequenceSet,
    build_cut_sequences,
    check_identities,
    explain_cuts,
    sink_cut_profile,
)

__all__ = [
    'CutSequenceSet',
    'build_cut_sequences',
    'check_identities',
    'explain_cuts',
    'sink_cut_profile',
]
