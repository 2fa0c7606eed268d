"""
rlnc-bounds - Bornes sur la probabilité d'échec du codage réseau linéaire aléatoire.

Calcul exact (fractions) des bornes supérieures et inférieures, vérification
par énumération exhaustive et par simulation Monte Carlo.
"""

__version__ = '0.1.0'

# Imports principaux pour faciliter l'utilisation
from rlnc_bounds.bounds.analysis import analyze_network
from rlnc_bounds.converters.format_converter import FormatConverter
from rlnc_bounds.gfield.field import GaloisField, get_field
from rlnc_bounds.models.data_model import ReportTable
from rlnc_bounds.network.model import Channel, Network, PathCollection
from rlnc_bounds.parsers.network_parser import read_network, write_network

__all__ = [
    'analyze_network',
    'FormatConverter',
    'GaloisField',
    'get_field',
    'ReportTable',
    'Channel',
    'Network',
    'PathCollection',
    'read_network',
    'write_network',
]
