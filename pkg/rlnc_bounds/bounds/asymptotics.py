"""
Comportement asymptotique des bornes quand l'ordre du corps croît.

q·B(q) converge vers une constante pour chaque borne : l + n pour la borne
par somme de chemins, l(1 + m) pour la borne par nombre de nœuds internes,
r + 1 pour la borne puits simple, et 1 (δ = 0) ou 0 pour la borne inférieure.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List

from rlnc_bounds.bounds.formulas import (
    bound_network_internal_count,
    bound_network_split,
    bound_sink_simple,
    lower_bound_value,
)
from rlnc_bounds.bounds.report import BoundEntry
from rlnc_bounds.gfield.field import factor_order
from rlnc_bounds.models.data_model import ReportTable
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

SWEEP_BOUNDS = ['network-split', 'network-internal-count', 'sink-simple', 'lower']
SWEEP_HEADERS = ['q', 'numerator', 'denominator', 'bound', 'scaled', 'scaled_float', 'valid']


def asymptotic_constants(n: int, l: int, m: int) -> Dict[str, int]:  # noqa: E741
    """
    Constantes limites des pires cas.

    Returns:
        dict: {'path_sum_limit': l + n, 'internal_count_limit': l·(1 + m)}
    """
    if n < 0 or m < 0 or l < 1:
        raise ValueError(f"Paramètres invalides : n = {n}, l = {l}, m = {m}")
    return {'path_sum_limit': l + n, 'internal_count_limit': l * (1 + m)}


@dataclass(frozen=True)
class SweepRow:
    """Une ligne du balayage : B(q) et q·B(q)."""
    q: int
    value: Fraction
    valid: bool

    @property
    def scaled(self) -> Fraction:
        return self.q * self.value

    def to_row(self) -> Dict[str, Any]:
        return {
            'q': self.q,
            'numerator': self.value.numerator,
            'denominator': self.value.denominator,
            'bound': float(self.value),
            'scaled': self.scaled,
            'scaled_float': float(self.scaled),
            'valid': self.valid,
        }


@dataclass
class SweepResult:
    """
    Résultat d'un balayage sur une liste d'ordres de corps.

    Attributes:
        bound (str): Borne balayée (voir SWEEP_BOUNDS)
        params (Dict[str, int]): Paramètres de la borne
        rows (List[SweepRow]): Une ligne par ordre de corps
        limit (int): Limite de q·B(q) quand q → ∞
    """
    bound: str
    params: Dict[str, int]
    rows: List[SweepRow]
    limit: int

    def scaled_values(self) -> List[Fraction]:
        return [row.scaled for row in self.rows]

    def to_table(self) -> ReportTable:
        return ReportTable(
            headers=list(SWEEP_HEADERS),
            rows=[row.to_row() for row in self.rows],
            metadata={'command': 'sweep', 'bound': self.bound, **self.params, 'limit': self.limit},
        )


def _evaluate(bound: str, q: int, params: Dict[str, int]) -> BoundEntry:
    w = params.get('w', 1)
    if bound == 'network-split':
        return bound_network_split(params['n'], params['l'], q, w)
    if bound == 'network-internal-count':
        return bound_network_internal_count(params['m'], params['l'], q, w)
    if bound == 'sink-simple':
        return bound_sink_simple(params['r'], q, w)
    value = lower_bound_value(q, params['delta'])
    return BoundEntry('lower', value, True, {'q': q, 'delta': params['delta']})


def _limit(bound: str, params: Dict[str, int]) -> int:
    if bound == 'network-split':
        return asymptotic_constants(params['n'], params['l'], 0)['path_sum_limit']
    if bound == 'network-internal-count':
        return asymptotic_constants(0, params['l'], params['m'])['internal_count_limit']
    if bound == 'sink-simple':
        return params['r'] + 1
    return 1 if params['delta'] == 0 else 0


REQUIRED_PARAMS = {
    'network-split': ('n', 'l', 'w'),
    'network-internal-count': ('m', 'l', 'w'),
    'sink-simple': ('r', 'w'),
    'lower': ('delta',),
}


def asymptotic_sweep(bound: str, fields: Iterable[int], **params: int) -> SweepResult:
    """
    Évalue q·B(q) pour chaque ordre de corps.

    Args:
        bound (str): 'network-split' (n, l, w), 'network-internal-count' (m, l, w),
            'sink-simple' (r, w) ou 'lower' (delta)
        fields (Iterable[int]): Ordres de corps supportés
        **params: Paramètres de la borne

    Returns:
        SweepResult: Une ligne par ordre ; une borne invalide est marquée, pas fatale

    Raises:
        UnsupportedFieldError: Si un ordre n'est pas supporté
        ValueError: Borne inconnue, paramètre manquant ou liste vide
    """
    if bound not in REQUIRED_PARAMS:
        raise ValueError(f"Borne inconnue : {bound} (attendu : {', '.join(SWEEP_BOUNDS)})")
    missing = [name for name in REQUIRED_PARAMS[bound] if params.get(name) is None]
    if missing:
        raise ValueError(f"Paramètres manquants pour {bound} : {', '.join(missing)}")
    orders = list(fields)
    if not orders:
        raise ValueError("Liste d'ordres de corps vide")
    used = {name: params[name] for name in REQUIRED_PARAMS[bound]}

    rows = []
    for q in orders:
        factor_order(q)
        entry = _evaluate(bound, q, used)
        rows.append(SweepRow(q, entry.value, entry.valid))
    result = SweepResult(bound, used, rows, _limit(bound, used))
    logger.info(f"Balayage {bound} sur {len(rows)} corps, limite {result.limit}")
    return result
