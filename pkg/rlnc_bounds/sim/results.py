"""
Résultats des essais, des simulations Monte Carlo et de l'énumération exacte.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import NormalDist
from typing import Any, Dict, Tuple

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.models.data_model import ReportTable

NETWORK_SCOPE = 'network'


@dataclass(frozen=True)
class TrialOutcome:
    """
    Issue d'un essai : rang de F_t par puits.

    Le réseau échoue dès qu'un puits échoue.
    """
    ranks: Dict[str, int]
    w: int

    @property
    def sink_failures(self) -> Dict[str, bool]:
        return {t: rank < self.w for t, rank in self.ranks.items()}

    @property
    def network_failure(self) -> bool:
        return any(self.sink_failures.values())


def z_value(level: float = Settings.CONFIDENCE_LEVEL) -> float:
    """Quantile de la loi normale pour un intervalle bilatéral de niveau level."""
    return NormalDist().inv_cdf(1 - (1 - level) / 2)


def confidence_interval(count: int, trials: int,
                        level: float = Settings.CONFIDENCE_LEVEL) -> Tuple[float, float, str]:
    """
    Intervalle de confiance d'une proportion count / trials.

    Approximation normale, ou intervalle de Wilson quand count ou
    trials − count est inférieur à Settings.WILSON_THRESHOLD.

    Returns:
        Tuple[float, float, str]: (borne basse, borne haute, méthode)
    """
    z = z_value(level)
    p = count / trials
    if min(count, trials - count) < Settings.WILSON_THRESHOLD:
        denom = 1 + z * z / trials
        center = (p + z * z / (2 * trials)) / denom
        half = z / denom * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials))
        return max(0.0, center - half), min(1.0, center + half), 'wilson'
    half = z * math.sqrt(p * (1 - p) / trials)
    return max(0.0, p - half), min(1.0, p + half), 'normal'


@dataclass
class MonteCarloResult:
    """
    Estimation Monte Carlo des probabilités d'échec.

    Le nombre de processus n'apparaît pas : le résultat en est indépendant.

    Attributes:
        network (str): Nom du réseau
        q (int): Ordre du corps
        w (int): Débit
        trials (int): Nombre d'essais
        seed (int): Graine maîtresse
        sink_failures (Dict[str, int]): Échecs par puits
        network_failures (int): Essais où au moins un puits échoue
    """
    network: str
    q: int
    w: int
    trials: int
    seed: int
    sink_failures: Dict[str, int] = field(default_factory=dict)
    network_failures: int = 0

    @property
    def sink_estimates(self) -> Dict[str, float]:
        return {t: count / self.trials for t, count in self.sink_failures.items()}

    @property
    def network_estimate(self) -> float:
        return self.network_failures / self.trials

    def standard_error(self, scope: str = NETWORK_SCOPE) -> float:
        p = self.network_estimate if scope == NETWORK_SCOPE else self.sink_estimates[scope]
        return math.sqrt(p * (1 - p) / self.trials)

    def _row(self, scope: str, count: int) -> Dict[str, Any]:
        low, high, method = confidence_interval(count, self.trials)
        return {
            'scope': scope,
            'failures': count,
            'trials': self.trials,
            'estimate': count / self.trials,
            'ci_low': low,
            'ci_high': high,
            'half_width': (high - low) / 2,
            'method': method,
        }

    def to_table(self) -> ReportTable:
        rows = [self._row(t, count) for t, count in self.sink_failures.items()]
        rows.append(self._row(NETWORK_SCOPE, self.network_failures))
        return ReportTable(
            headers=['scope', 'failures', 'trials', 'estimate', 'ci_low', 'ci_high', 'half_width', 'method'],
            rows=rows,
            metadata={'command': 'simulate', 'network': self.network, 'q': self.q, 'w': self.w,
                      'trials': self.trials, 'seed': self.seed,
                      'confidence_level': Settings.CONFIDENCE_LEVEL},
        )


@dataclass
class ExactResult:
    """
    Probabilités d'échec exactes obtenues par énumération de toutes les affectations.

    Attributes:
        network (str): Nom du réseau
        q (int): Ordre du corps
        w (int): Débit
        free_coefficients (int): N, nombre de coefficients locaux
        total (int): q^N
        sink_failures (Dict[str, int]): Affectations en échec par puits
        network_failures (int): Affectations où au moins un puits échoue
    """
    network: str
    q: int
    w: int
    free_coefficients: int
    total: int
    sink_failures: Dict[str, int] = field(default_factory=dict)
    network_failures: int = 0

    @property
    def sink_probabilities(self) -> Dict[str, Fraction]:
        return {t: Fraction(count, self.total) for t, count in self.sink_failures.items()}

    @property
    def network_probability(self) -> Fraction:
        return Fraction(self.network_failures, self.total)

    def is_consistent(self) -> bool:
        """max_t P_{e_t} ≤ P_e ≤ Σ_t P_{e_t}."""
        probabilities = list(self.sink_probabilities.values())
        return max(probabilities) <= self.network_probability <= sum(probabilities)

    def _row(self, scope: str, count: int) -> Dict[str, Any]:
        value = Fraction(count, self.total)
        return {
            'scope': scope,
            'failures': count,
            'total': self.total,
            'numerator': value.numerator,
            'denominator': value.denominator,
            'float': float(value),
        }

    def to_table(self) -> ReportTable:
        rows = [self._row(t, count) for t, count in self.sink_failures.items()]
        rows.append(self._row(NETWORK_SCOPE, self.network_failures))
        return ReportTable(
            headers=['scope', 'failures', 'total', 'numerator', 'denominator', 'float'],
            rows=rows,
            metadata={'command': 'enumerate', 'network': self.network, 'q': self.q, 'w': self.w,
                      'free_coefficients': self.free_coefficients, 'total': self.total,
                      'consistent': self.is_consistent()},
        )
