"""
Générateurs de réseaux : familles de référence et instances aléatoires.
"""
from .families import BUTTERFLY_WIRING, gen_butterfly, gen_plait, gen_plait_union
from .random_layered import gen_layered_random

__all__ = [
    'BUTTERFLY_WIRING',
    'gen_butterfly',
    'gen_plait',
    'gen_plait_union',
    'gen_layered_random',
]
