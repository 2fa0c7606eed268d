"""
Réseaux de référence : papillon, tresses et unions de tresses.

Les identifiants sont fixes (e1..e9 pour le papillon) pour que les listings de
coupes servent de données de référence dans les tests.
"""
from typing import List, Tuple

from rlnc_bounds.network.model import Channel, Network
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

BUTTERFLY_WIRING = [
    ('e1', 's', 'i1'),
    ('e2', 's', 'i2'),
    ('e3', 'i1', 't1'),
    ('e4', 'i1', 'i3'),
    ('e5', 'i2', 'i3'),
    ('e6', 'i2', 't2'),
    ('e7', 'i3', 'i4'),
    ('e8', 'i4', 't1'),
    ('e9', 'i4', 't2'),
]


def gen_butterfly() -> Network:
    """
    Réseau papillon : source s, nœuds i1..i4, puits t1 et t2, canaux e1..e9.

    Example:
        >>> [c.id for c in gen_butterfly().in_channels('i3')]
        ['e4', 'e5']
    """
    return Network(
        name='butterfly',
        nodes=('s', 'i1', 'i2', 'i3', 'i4', 't1', 't2'),
        channels=tuple(Channel(*wiring) for wiring in BUTTERFLY_WIRING),
        source='s',
        sinks=('t1', 't2'),
    )


def _chain(start: str, internal: List[str], sink: str, w: int,
           first_id: int) -> Tuple[List[Channel], int]:
    """w canaux parallèles entre chaque paire de nœuds consécutifs de la chaîne."""
    stops = [start, *internal, sink]
    channels = []
    next_id = first_id
    for tail, head in zip(stops, stops[1:]):
        for _ in range(w):
            channels.append(Channel(f'e{next_id}', tail, head))
            next_id += 1
    return channels, next_id


def _check_parameters(**params: int) -> None:
    for name, value in params.items():
        minimum = 0 if name in ('r', 'R') else 1
        if not isinstance(value, int) or value < minimum:
            raise ValueError(f"Paramètre {name} invalide : {value!r} (minimum {minimum})")


def gen_plait(w: int, r: int) -> Network:
    """
    Tresse : chaîne s → i1 → ... → ir → t avec w canaux parallèles par étage.

    Args:
        w (int): Canaux par étage (≥ 1)
        r (int): Nœuds internes (≥ 0)
    """
    _check_parameters(w=w, r=r)
    internal = [f'i{k}' for k in range(1, r + 1)]
    channels, _ = _chain('s', internal, 't', w, 1)
    logger.debug(f"Tresse générée : w = {w}, r = {r}, {len(channels)} canaux")
    return Network(f'plait-{w}-{r}', ('s', *internal, 't'), tuple(channels), 's', ('t',))


def gen_plait_union(w: int, R: int, l: int) -> Network:  # noqa: E741
    """
    Union de l tresses partageant la source : R nœuds internes vers t1,
    aucun vers t2..tl. Pour l = 1, identique à gen_plait(w, R).
    """
    _check_parameters(w=w, R=R, l=l)
    if l == 1:
        return gen_plait(w, R)
    internal = [f'i{k}' for k in range(1, R + 1)]
    sinks = [f't{k}' for k in range(1, l + 1)]
    channels, next_id = _chain('s', internal, sinks[0], w, 1)
    for sink in sinks[1:]:
        direct, next_id = _chain('s', [], sink, w, next_id)
        channels.extend(direct)
    return Network(f'plait-union-{w}-{R}-{l}', ('s', *internal, *sinks), tuple(channels), 's',
                   tuple(sinks))
