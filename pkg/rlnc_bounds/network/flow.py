"""
Flots unitaires : coupe minimale, chemins disjoints en canaux (Menger) et
sélection de chemins minimisant le nombre de nœuds intermédiaires.

Toutes les recherches parcourent les canaux dans l'ordre du réseau, ce qui
rend les collections de chemins reproductibles.
"""
from collections import deque
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.network.graph import to_digraph
from rlnc_bounds.network.model import Network, PathCollection
from rlnc_bounds.utils.exceptions import CapacityError, NetworkValidationError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


def _require_sink(net: Network, t: str) -> None:
    if t not in net.sinks:
        raise NetworkValidationError(f"{t} n'est pas un puits de {net.name}")


def _augmenting_path(net: Network, t: str, used: Set[str]) -> Optional[List[Tuple[str, bool]]]:
    """
    Chemin augmentant le plus court dans le graphe résiduel (BFS).

    Retourne une liste de (canal, sens_direct) ou None.
    """
    parent: Dict[str, Tuple[str, str, bool]] = {}
    visited = {net.source}
    queue = deque([net.source])
    while queue:
        node = queue.popleft()
        steps = [(c.id, c.head, True) for c in net.out_channels(node) if c.id not in used]
        steps += [(c.id, c.tail, False) for c in net.in_channels(node) if c.id in used]
        for cid, nxt, forward in steps:
            if nxt in visited:
                continue
            visited.add(nxt)
            parent[nxt] = (node, cid, forward)
            if nxt == t:
                path = []
                cur = t
                while cur != net.source:
                    prev, pcid, pforward = parent[cur]
                    path.append((pcid, pforward))
                    cur = prev
                return list(reversed(path))
            queue.append(nxt)
    return None


def _unit_flow(net: Network, t: str, limit: Optional[int] = None) -> Set[str]:
    """Ensemble des canaux portant une unité de flot (Edmonds-Karp unitaire)."""
    used: Set[str] = set()
    value = 0
    while limit is None or value < limit:
        path = _augmenting_path(net, t, used)
        if path is None:
            break
        for cid, forward in path:
            if forward:
                used.add(cid)
            else:
                used.discard(cid)
        value += 1
    return used


def _decompose(net: Network, t: str, used: Set[str]) -> List[Tuple[str, ...]]:
    """Décompose un flot acyclique en chemins s → t, triés par premier canal."""
    remaining = set(used)
    paths = []
    while any(c.id in remaining for c in net.out_channels(net.source)):
        node, path = net.source, []
        while node != t:
            channel = next(c for c in net.out_channels(node) if c.id in remaining)
            remaining.discard(channel.id)
            path.append(channel.id)
            node = channel.head
        paths.append(tuple(path))
    paths.sort(key=lambda p: net.channel_index[p[0]])
    return paths


def min_cut_capacity(net: Network, t: str) -> int:
    """
    Capacité de coupe minimale C_t entre la source et t.

    Égale au nombre maximal de chemins disjoints en canaux (flot unitaire).

    Raises:
        NetworkValidationError: Si t n'est pas un puits
    """
    _require_sink(net, t)
    used = _unit_flow(net, t)
    return sum(1 for c in net.out_channels(net.source) if c.id in used)


def find_disjoint_paths(net: Network, t: str, w: int) -> PathCollection:
    """
    Extrait w chemins disjoints en canaux de s vers t.

    Args:
        net (Network): Réseau valide
        t (str): Puits
        w (int): Nombre de chemins voulus

    Returns:
        PathCollection: Collection déterministe (certified=True)

    Raises:
        CapacityError: Si w > C_t
    """
    _require_sink(net, t)
    if w < 1:
        raise CapacityError(f"Débit invalide : {w}", sink=t)
    used = _unit_flow(net, t, limit=w)
    value = sum(1 for c in net.out_channels(net.source) if c.id in used)
    if value < w:
        capacity = min_cut_capacity(net, t)
        logger.error(f"Débit {w} supérieur à C_{t} = {capacity}")
        raise CapacityError(
            f"Débit {w} supérieur à la coupe minimale C_{t} = {capacity}", sink=t, capacity=capacity
        )
    collection = PathCollection.from_paths(net, t, _decompose(net, t, used))
    logger.debug(f"{w} chemins disjoints vers {t} : r = {collection.r}")
    return collection


class _BudgetExceeded(Exception):
    pass


def _all_paths(net: Network, t: str, budget: int) -> List[Tuple[str, ...]]:
    """Tous les chemins s → t (DAG), dans l'ordre de parcours des canaux."""
    graph = to_digraph(net)
    useful = nx.ancestors(graph, t) | {t}
    paths: List[Tuple[str, ...]] = []

    def extend(node: str, prefix: List[str]) -> None:
        if node == t:
            paths.append(tuple(prefix))
            if len(paths) > budget:
                raise _BudgetExceeded()
            return
        for c in net.out_channels(node):
            if c.head in useful:
                prefix.append(c.id)
                extend(c.head, prefix)
                prefix.pop()

    extend(net.source, [])
    return paths


def _exhaustive_min_internal(net: Network, t: str, w: int, budget: int) -> Tuple[Tuple[str, ...], ...]:
    """Meilleure collection par recherche exhaustive avec élagage, ou _BudgetExceeded."""
    candidates = _all_paths(net, t, budget)
    infos = []
    for path in candidates:
        nodes = frozenset(net.channel(cid).head for cid in path[:-1])
        infos.append((path, frozenset(path), nodes))
    infos.sort(key=lambda info: len(info[2]))

    best: Dict[str, object] = {'size': None, 'paths': None}
    visited = [0]

    def search(start: int, chosen: List[int], channels: frozenset, nodes: frozenset) -> None:
        visited[0] += 1
        if visited[0] > budget:
            raise _BudgetExceeded()
        if best['size'] is not None and len(nodes) >= best['size']:
            return
        if len(chosen) == w:
            best['size'] = len(nodes)
            best['paths'] = [infos[i][0] for i in chosen]
            return
        for i in range(start, len(infos)):
            path, path_channels, path_nodes = infos[i]
            if channels & path_channels:
                continue
            chosen.append(i)
            search(i + 1, chosen, channels | path_channels, nodes | path_nodes)
            chosen.pop()

    search(0, [], frozenset(), frozenset())
    if best['paths'] is None:
        raise _BudgetExceeded()
    return tuple(sorted(best['paths'], key=lambda p: net.channel_index[p[0]]))


def _min_cost_heuristic(net: Network, t: str, w: int) -> PathCollection:
    """
    Flot de coût minimal avec coût unitaire par traversée de nœud intermédiaire.

    Minimise le nombre de traversées, majorant du nombre de nœuds distincts.
    """
    graph = nx.DiGraph()
    for node in net.nodes:
        cost = 0 if node in (net.source, t) else 1
        graph.add_edge(('in', node), ('out', node), capacity=w, weight=cost)
    for c in net.channels:
        graph.add_edge(('out', c.tail), ('ch', c.id), capacity=1, weight=0)
        graph.add_edge(('ch', c.id), ('in', c.head), capacity=1, weight=0)
    graph.nodes[('out', net.source)]['demand'] = -w
    graph.nodes[('in', t)]['demand'] = w
    flow = nx.min_cost_flow(graph)
    used = {c.id for c in net.channels if flow[('out', c.tail)][('ch', c.id)] > 0}
    return PathCollection.from_paths(net, t, _decompose(net, t, used), certified=False)


def select_min_internal_paths(net: Network, t: str, w: int,
                              budget: int = Settings.DEFAULT_SEARCH_BUDGET) -> PathCollection:
    """
    Collection de w chemins disjoints minimisant les nœuds intermédiaires distincts.

    Recherche exhaustive bornée par `budget` collections candidates ; au-delà,
    heuristique de flot de coût minimal, marquée non certifiée. Le résultat
    n'utilise jamais plus de nœuds que find_disjoint_paths.

    Raises:
        CapacityError: Si w > C_t
    """
    baseline = find_disjoint_paths(net, t, w)
    try:
        paths = _exhaustive_min_internal(net, t, w, budget)
        collection = PathCollection.from_paths(net, t, paths, certified=True)
        logger.info(f"Chemins minimaux vers {t} : R = {collection.r} (certifié)")
        return collection
    except _BudgetExceeded:
        logger.warning(f"Budget de recherche ({budget}) dépassé pour {t}, heuristique utilisée")

    heuristic = _min_cost_heuristic(net, t, w)
    if heuristic.r <= baseline.r:
        return heuristic
    return PathCollection(baseline.sink, baseline.paths, baseline.internal_nodes, certified=False)


def select_paths(net: Network, w: int, strategy: str = 'first-found',
                 budget: int = Settings.DEFAULT_SEARCH_BUDGET) -> List[PathCollection]:
    """
    Une collection par puits, selon la stratégie 'first-found' ou 'min-internal'.

    Raises:
        CapacityError: Si w dépasse la coupe minimale d'un puits
    """
    if strategy == 'first-found':
        return [find_disjoint_paths(net, t, w) for t in net.sinks]
    if strategy == 'min-internal':
        return [select_min_internal_paths(net, t, w, budget) for t in net.sinks]
    raise ValueError(f"Stratégie inconnue : {strategy}")


def check_rate(net: Network, w: int) -> Dict[str, int]:
    """
    Vérifie w ≤ C_t pour tous les puits.

    Returns:
        Dict[str, int]: C_t par puits

    Raises:
        CapacityError: En nommant le premier puits violant la contrainte
    """
    capacities = {t: min_cut_capacity(net, t) for t in net.sinks}
    for t, capacity in capacities.items():
        if w > capacity:
            logger.error(f"Débit {w} supérieur à C_{t} = {capacity}")
            raise CapacityError(
                f"Débit {w} supérieur à la coupe minimale C_{t} = {capacity}", sink=t, capacity=capacity
            )
    return capacities


def summarize_network(net: Network) -> Dict[str, object]:
    """Résumé : |V|, |E|, |J| et C_t par puits."""
    return {
        'name': net.name,
        'nodes': len(net.nodes),
        'channels': len(net.channels),
        'internal_nodes': len(net.internal_nodes),
        'min_cut': {t: min_cut_capacity(net, t) for t in net.sinks},
    }
