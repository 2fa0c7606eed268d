"""
Énumération exhaustive des affectations de coefficients : probabilités
d'échec exactes.

L'affectation d'indice idx a pour chiffres en base q, du poids fort au poids
faible, les coefficients des paires dans l'ordre odomètre du moteur.
"""
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

import numpy as np

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.gfield.field import GaloisField
from rlnc_bounds.network.model import Network
from rlnc_bounds.sim.engine import Counts, cached_engine, count_free_coefficients, index_blocks, merge_counts
from rlnc_bounds.sim.results import ExactResult
from rlnc_bounds.utils.exceptions import ConfigError, EnumerationCapError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

# Au-delà, les indices ne tiennent plus dans un int64.
INDEX_LIMIT = 2 ** 62


def assignment_digits(start: int, stop: int, q: int, n_coeffs: int) -> np.ndarray:
    """Affectations d'indices [start, stop), forme (stop − start, n_coeffs)."""
    indices = np.arange(start, stop, dtype=np.int64)
    digits = np.zeros((stop - start, n_coeffs), dtype=np.int64)
    for j in range(n_coeffs - 1, -1, -1):
        digits[:, j] = indices % q
        indices //= q
    return digits


def _count_range(net: Network, w: int, q: int, start: int, stop: int, batch_size: int) -> Counts:
    engine = cached_engine(net, w, q)
    parts = []
    for a, b in index_blocks(stop - start, batch_size):
        digits = assignment_digits(start + a, start + b, q, engine.free_coefficients)
        parts.append(engine.failure_counts(digits))
    return merge_counts(net, parts)


def _partition(total: int, workers: int) -> List[Tuple[int, int]]:
    step = -(-total // workers)
    return [(start, min(start + step, total)) for start in range(0, total, step)]


def enumerate_exact(net: Network, w: int, field: GaloisField,
                    cap: int = Settings.DEFAULT_ENUMERATION_CAP, workers: int = 1,
                    batch_size: int = Settings.BATCH_SIZE) -> ExactResult:
    """
    Compte exactement les affectations en échec parmi les q^N possibles.

    Args:
        net (Network): Réseau valide
        w (int): Débit
        field (GaloisField): Corps de codage
        cap (int): Nombre maximal d'affectations énumérées
        workers (int): Processus ; l'espace est partagé en plages d'indices
        batch_size (int): Affectations par lot vectorisé

    Returns:
        ExactResult: Comptes et probabilités exactes

    Raises:
        EnumerationCapError: Si q^N dépasse cap
    """
    if workers < 1:
        raise ConfigError(f"Nombre de processus invalide : {workers}")
    q = field.order
    n_coeffs = count_free_coefficients(net, w)
    total = q ** n_coeffs
    if total > cap or total > INDEX_LIMIT:
        logger.error(f"Énumération refusée : {q}^{n_coeffs} = {total} > {cap}")
        raise EnumerationCapError(
            f"{q}^{n_coeffs} = {total} affectations, plafond {cap}", required=total, cap=cap
        )

    logger.info(f"Énumération de {total} affectations sur {net.name} ({workers} processus)")
    ranges = _partition(total, workers)
    if workers == 1 or len(ranges) == 1:
        parts = [_count_range(net, w, q, start, stop, batch_size) for start, stop in ranges]
    else:
        args = [(net, w, q, start, stop, batch_size) for start, stop in ranges]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(_count_range, *zip(*args)))

    sinks, network = merge_counts(net, parts)
    result = ExactResult(net.name, q, w, n_coeffs, total, sinks, network)
    logger.info(f"Énumération terminée : P_e = {result.network_probability}")
    return result
