"""
Validation structurelle et ordre topologique des réseaux.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List

import networkx as nx

from rlnc_bounds.network.model import Network
from rlnc_bounds.utils.exceptions import CycleError, NetworkValidationError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


@dataclass(frozen=True)
class Violation:
    """Une règle de validité non respectée."""
    kind: str
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.message}"


@dataclass
class ValidationReport:
    """
    Résultat de validate_network.

    Attributes:
        network (str): Nom du réseau validé
        violations (List[Violation]): Violations trouvées (vide si valide)
    """
    network: str
    violations: List[Violation] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]

    def raise_if_invalid(self) -> None:
        """
        Raises:
            NetworkValidationError: Si au moins une violation existe
        """
        if self.violations:
            raise NetworkValidationError(
                f"Réseau {self.network} invalide : " + '; '.join(str(v) for v in self.violations),
                self.violations,
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'network': self.network,
            'valid': self.is_valid,
            'violations': [{'kind': v.kind, 'message': v.message} for v in self.violations],
        }


def to_digraph(net: Network) -> nx.DiGraph:
    """Graphe simple sous-jacent (les canaux parallèles sont fusionnés)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(net.nodes)
    graph.add_edges_from((c.tail, c.head) for c in net.channels)
    return graph


def validate_network(net: Network) -> ValidationReport:
    """
    Vérifie acyclicité, accessibilité des puits et absence d'entrées réelles en s.

    Ne lève jamais : les problèmes sont listés dans le rapport.

    Args:
        net (Network): Réseau à valider

    Returns:
        ValidationReport: Rapport structuré
    """
    report = ValidationReport(net.name)
    known = set(net.nodes)

    seen_ids = set()
    for c in net.channels:
        if c.id in seen_ids:
            report.violations.append(Violation('duplicate-channel', f"Canal {c.id} défini deux fois"))
        seen_ids.add(c.id)
        for end in (c.tail, c.head):
            if end not in known:
                report.violations.append(
                    Violation('unknown-node', f"Canal {c.id} référence le nœud inconnu {end}")
                )

    if net.source not in known:
        report.violations.append(Violation('unknown-node', f"Source {net.source} inconnue"))
    if not net.sinks:
        report.violations.append(Violation('no-sink', "Aucun puits déclaré"))
    for t in net.sinks:
        if t not in known:
            report.violations.append(Violation('unknown-node', f"Puits {t} inconnu"))
        if t == net.source:
            report.violations.append(Violation('source-is-sink', f"{t} est à la fois source et puits"))
    if len(set(net.sinks)) != len(net.sinks):
        report.violations.append(Violation('duplicate-sink', "Puits déclaré plusieurs fois"))

    incoming = [c.id for c in net.in_channels(net.source)]
    if incoming:
        report.violations.append(
            Violation('source-in-channels', f"La source a des canaux entrants : {', '.join(incoming)}")
        )

    graph = to_digraph(net)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        report.violations.append(
            Violation('cycle', "Cycle détecté : " + ' -> '.join(u for u, _ in cycle))
        )

    if net.source in graph:
        reachable = nx.descendants(graph, net.source)
        for t in net.sinks:
            if t in graph and t != net.source and t not in reachable:
                report.violations.append(
                    Violation('unreachable-sink', f"Puits {t} inaccessible depuis {net.source}")
                )

    if report.is_valid:
        logger.debug(f"Réseau {net.name} valide")
    else:
        logger.warning(f"Réseau {net.name} : {len(report.violations)} violation(s)")
    return report


def topological_order(net: Network) -> List[str]:
    """
    Ordre topologique déterministe (Kahn, plus petit identifiant d'abord).

    Raises:
        CycleError: Si le graphe contient un cycle
    """
    try:
        return list(nx.lexicographical_topological_sort(to_digraph(net)))
    except nx.NetworkXUnfeasible:
        logger.error(f"Cycle détecté dans {net.name}")
        raise CycleError(f"Le réseau {net.name} contient un cycle") from None
