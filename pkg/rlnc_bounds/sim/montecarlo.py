"""
Estimation Monte Carlo des probabilités d'échec, reproductible quel que soit
le nombre de processus.

Chaque essai i tire ses coefficients avec trial_rng(seed, i) ; les essais sont
découpés en blocs d'indices consécutifs, traités par lots numpy puis sommés.
"""
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.gfield.field import GaloisField
from rlnc_bounds.network.flow import check_rate
from rlnc_bounds.network.model import Network
from rlnc_bounds.sim.engine import Counts, cached_engine, index_blocks, merge_counts, trial_rng
from rlnc_bounds.sim.results import MonteCarloResult
from rlnc_bounds.utils.exceptions import ConfigError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


def _simulate_block(net: Network, w: int, q: int, seed: int, start: int, stop: int) -> Counts:
    """Échecs sur les essais d'indices [start, stop)."""
    engine = cached_engine(net, w, q)
    coefficients = np.stack([
        engine.field.random_values(trial_rng(seed, i), engine.free_coefficients)
        for i in range(start, stop)
    ])
    return engine.failure_counts(coefficients)


def monte_carlo(net: Network, w: int, field: GaloisField, trials: int, seed: int,
                workers: int = 1, batch_size: int = Settings.BATCH_SIZE) -> MonteCarloResult:
    """
    Estime P_e et P_{e_t} sur trials essais indépendants.

    Args:
        net (Network): Réseau valide
        w (int): Débit
        field (GaloisField): Corps de codage
        trials (int): Nombre d'essais (≥ 1)
        seed (int): Graine maîtresse
        workers (int): Nombre de processus ; n'influe pas sur le résultat
        batch_size (int): Essais par bloc

    Returns:
        MonteCarloResult: Comptes d'échecs et estimations

    Raises:
        ConfigError: trials ou workers < 1
        CapacityError: w dépasse la coupe minimale d'un puits
    """
    if trials < 1:
        raise ConfigError(f"Nombre d'essais invalide : {trials}")
    if workers < 1:
        raise ConfigError(f"Nombre de processus invalide : {workers}")
    check_rate(net, w)

    blocks = index_blocks(trials, batch_size)
    args = [(net, w, field.order, seed, start, stop) for start, stop in blocks]
    logger.info(f"Monte Carlo sur {net.name} : {trials} essais, {len(blocks)} blocs, {workers} processus")
    if workers == 1 or len(blocks) == 1:
        parts = [_simulate_block(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(_simulate_block, *zip(*args)))

    sinks, network = merge_counts(net, parts)
    result = MonteCarloResult(net.name, field.order, w, trials, seed, sinks, network)
    logger.info(f"Monte Carlo terminé : P_e ≈ {result.network_estimate:.6f}")
    return result
