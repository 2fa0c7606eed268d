"""
Modèle de réseau : multigraphe orienté acyclique, source unique, puits multiples.
"""
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from rlnc_bounds.utils.exceptions import PathError

IMAGINARY_PREFIX = 'd'
RESERVED_ID_PATTERN = re.compile(rf'^{IMAGINARY_PREFIX}\d+$')


def imaginary_channel_ids(w: int) -> Tuple[str, ...]:
    """Identifiants réservés d1..dw des canaux imaginaires entrant dans la source."""
    return tuple(f'{IMAGINARY_PREFIX}{j}' for j in range(1, w + 1))


@dataclass(frozen=True)
class Channel:
    """
    Canal orienté tail → head transportant un symbole par unité de temps.

    Plusieurs canaux peuvent relier les mêmes deux nœuds.
    """
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class Network:
    """
    Réseau de multidiffusion à source unique.

    L'ordre de `channels` est l'ordre de parcours déterministe utilisé par
    toutes les recherches (flots, chemins, coefficients).

    Attributes:
        name (str): Nom du réseau
        nodes (Tuple[str, ...]): Nœuds, dans l'ordre du fichier
        channels (Tuple[Channel, ...]): Canaux, dans l'ordre du fichier
        source (str): Nœud source s
        sinks (Tuple[str, ...]): Puits T, non vide

    Example:
        >>> net = Network('chaine', ('s', 'a', 't'),
        ...               (Channel('e1', 's', 'a'), Channel('e2', 'a', 't')), 's', ('t',))
        >>> [c.id for c in net.in_channels('t')]
        ['e2']
    """
    name: str
    nodes: Tuple[str, ...]
    channels: Tuple[Channel, ...]
    source: str
    sinks: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'nodes', tuple(self.nodes))
        object.__setattr__(self, 'channels', tuple(self.channels))
        object.__setattr__(self, 'sinks', tuple(self.sinks))

    @cached_property
    def _channel_map(self) -> Dict[str, Channel]:
        return {c.id: c for c in self.channels}

    @cached_property
    def channel_index(self) -> Dict[str, int]:
        """Position de chaque canal dans l'ordre de parcours."""
        return {c.id: i for i, c in enumerate(self.channels)}

    @cached_property
    def _incidence(self) -> Tuple[Dict[str, List[Channel]], Dict[str, List[Channel]]]:
        incoming = {n: [] for n in self.nodes}
        outgoing = {n: [] for n in self.nodes}
        for c in self.channels:
            outgoing.setdefault(c.tail, []).append(c)
            incoming.setdefault(c.head, []).append(c)
        return incoming, outgoing

    def channel(self, channel_id: str) -> Channel:
        try:
            return self._channel_map[channel_id]
        except KeyError:
            raise PathError(f"Canal inconnu : {channel_id}") from None

    def has_channel(self, channel_id: str) -> bool:
        return channel_id in self._channel_map

    def in_channels(self, node: str) -> Tuple[Channel, ...]:
        """In(node), dans l'ordre de parcours."""
        return tuple(self._incidence[0].get(node, ()))

    def out_channels(self, node: str) -> Tuple[Channel, ...]:
        """Out(node), dans l'ordre de parcours."""
        return tuple(self._incidence[1].get(node, ()))

    @property
    def internal_nodes(self) -> Tuple[str, ...]:
        """J = V \\ ({s} ∪ T)."""
        excluded = {self.source, *self.sinks}
        return tuple(n for n in self.nodes if n not in excluded)

    @property
    def transit_nodes(self) -> Tuple[str, ...]:
        """J augmenté des puits qui relaient (ayant des canaux sortants)."""
        return tuple(n for n in self.nodes
                     if n != self.source and (n not in self.sinks or self.out_channels(n)))


@dataclass(frozen=True)
class PathCollection:
    """
    w chemins disjoints en canaux de la source vers un puits.

    Attributes:
        sink (str): Puits visé
        paths (Tuple[Tuple[str, ...], ...]): Suites d'identifiants de canaux
        internal_nodes (Tuple[str, ...]): Nœuds intermédiaires distincts traversés
        certified (bool): False si la collection vient d'une heuristique
            sans garantie de minimalité
    """
    sink: str
    paths: Tuple[Tuple[str, ...], ...]
    internal_nodes: Tuple[str, ...] = field(default=())
    certified: bool = True

    @classmethod
    def from_paths(cls, net: Network, sink: str, paths: Iterable[Sequence[str]],
                   certified: bool = True) -> 'PathCollection':
        """
        Construit et valide une collection à partir de suites de canaux.

        Les nœuds intermédiaires sont rangés dans l'ordre des nœuds du réseau.

        Raises:
            PathError: Si un chemin est discontinu, mal terminé ou si deux
                chemins partagent un canal
        """
        paths = tuple(tuple(p) for p in paths)
        collection = cls(sink, paths, _intermediate_nodes(net, paths), certified)
        collection.validate_against(net)
        return collection

    @property
    def w(self) -> int:
        return len(self.paths)

    @property
    def r(self) -> int:
        """Nombre de nœuds intermédiaires distincts."""
        return len(self.internal_nodes)

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.paths)

    @property
    def last_channels(self) -> Tuple[str, ...]:
        return tuple(p[-1] for p in self.paths)

    def validate_against(self, net: Network) -> None:
        """
        Vérifie contiguïté, extrémités et disjonction des chemins.

        Raises:
            PathError: À la première incohérence rencontrée
        """
        if self.sink not in net.sinks:
            raise PathError(f"{self.sink} n'est pas un puits de {net.name}")
        seen = set()
        for j, path in enumerate(self.paths, start=1):
            if not path:
                raise PathError(f"Chemin {j} vide vers {self.sink}")
            channels = [net.channel(cid) for cid in path]
            if channels[0].tail != net.source:
                raise PathError(f"Chemin {j} vers {self.sink} ne part pas de la source")
            if channels[-1].head != self.sink:
                raise PathError(f"Chemin {j} n'aboutit pas à {self.sink}")
            for prev, nxt in zip(channels, channels[1:]):
                if prev.head != nxt.tail:
                    raise PathError(f"Chemin {j} discontinu entre {prev.id} et {nxt.id}")
            for cid in path:
                if cid in seen:
                    raise PathError(f"Canal {cid} partagé par deux chemins vers {self.sink}")
                seen.add(cid)
        expected = _intermediate_nodes(net, self.paths)
        if tuple(self.internal_nodes) != expected:
            raise PathError(f"Nœuds intermédiaires incohérents pour {self.sink}")


def _intermediate_nodes(net: Network, paths: Sequence[Sequence[str]]) -> Tuple[str, ...]:
    touched = set()
    for path in paths:
        for cid in path[:-1]:
            if net.has_channel(cid):
                touched.add(net.channel(cid).head)
    return tuple(n for n in net.nodes if n in touched)
