"""
Réseaux aléatoires en couches, acceptés seulement si C_t ≥ w pour chaque puits.
"""
from typing import List

import numpy as np

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.network.flow import min_cut_capacity
from rlnc_bounds.network.graph import validate_network
from rlnc_bounds.network.model import Channel, Network
from rlnc_bounds.utils.exceptions import GenerationError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


def _draw(rng: np.random.Generator, layers: int, width: int, w: int, l: int,  # noqa: E741
          name: str) -> Network:
    channels: List[Channel] = []

    def connect(tail: str, head: str) -> None:
        channels.append(Channel(f'e{len(channels) + 1}', tail, head))

    previous = ['s']
    internal: List[str] = []
    for k in range(1, layers + 1):
        layer = [f'v{k}_{j}' for j in range(1, width + 1)]
        for node in layer:
            for _ in range(int(rng.integers(1, w + 1))):
                connect(previous[int(rng.integers(len(previous)))], node)
        internal.extend(layer)
        previous = layer

    sinks = [f't{k}' for k in range(1, l + 1)]
    for sink in sinks:
        fan_in = w + int(rng.integers(0, 2))
        for _ in range(fan_in):
            # dernière couche de préférence, quelques raccourcis vers les couches précédentes
            pool = previous if rng.random() < 0.75 else internal
            connect(pool[int(rng.integers(len(pool)))], sink)
    return Network(name, ('s', *internal, *sinks), tuple(channels), 's', tuple(sinks))


def gen_layered_random(layers: int, width: int, w: int, l: int, seed: int,  # noqa: E741
                       max_attempts: int = Settings.GENERATOR_MAX_ATTEMPTS) -> Network:
    """
    Génère un DAG en couches avec l puits, chacun de coupe minimale ≥ w.

    Les tirages sont rejetés jusqu'à obtenir une instance valide ; le résultat
    ne dépend que des paramètres et de la graine.

    Args:
        layers (int): Nombre de couches internes
        width (int): Nœuds par couche
        w (int): Débit visé
        l (int): Nombre de puits
        seed (int): Graine
        max_attempts (int): Budget de rejet

    Raises:
        GenerationError: Si aucune instance acceptable n'est trouvée
    """
    for name, value in (('layers', layers), ('width', width), ('w', w), ('l', l)):
        if value < 1:
            raise ValueError(f"Paramètre {name} invalide : {value}")
    rng = np.random.default_rng(seed)
    name = f'random-{layers}x{width}-w{w}-l{l}-s{seed}'
    for attempt in range(1, max_attempts + 1):
        net = _draw(rng, layers, width, w, l, name)
        if not validate_network(net).is_valid:
            continue
        if all(min_cut_capacity(net, t) >= w for t in net.sinks):
            logger.info(f"Réseau aléatoire {name} accepté après {attempt} tirage(s)")
            return net
    logger.error(f"Aucun réseau acceptable après {max_attempts} tirages")
    raise GenerationError(
        f"Aucun réseau avec C_t ≥ {w} après {max_attempts} tirages : augmenter width (actuellement {width})"
    )
