"""
Chaîne d'analyse complète d'un réseau : chemins, coupes, bornes supérieures
et inférieures, rassemblées dans un BoundReport.
"""
from typing import Dict, List, Optional

from rlnc_bounds.bounds.formulas import (
    bound_network_cutwise,
    bound_network_internal_count,
    bound_network_split,
    bound_sink_cutwise,
    bound_sink_simple,
    compute_a,
    lower_bound_entries,
    lower_bounds,
)
from rlnc_bounds.bounds.report import BoundEntry, BoundReport
from rlnc_bounds.config.settings import Settings
from rlnc_bounds.cuts.sequences import build_cut_sequences, explain_cuts, sink_cut_profile
from rlnc_bounds.gfield.field import factor_order
from rlnc_bounds.network.flow import check_rate, select_paths
from rlnc_bounds.network.graph import validate_network
from rlnc_bounds.network.model import Network
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

TIGHT = 'tight-by-construction'


def plait_chain_lengths(net: Network, w: int) -> Optional[Dict[str, int]]:
    """
    Reconnaît une union de tresses partageant la source.

    Chaque étage d'une tresse est formé de w canaux parallèles et chaque nœud
    non source reçoit d'un seul prédécesseur.

    Returns:
        Dict[str, int] | None: Nombre de nœuds internes de la tresse de chaque
        puits, ou None si le réseau n'a pas cette forme
    """
    def groups(channels) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for c in channels:
            counts[c.head] = counts.get(c.head, 0) + 1
        return counts

    for node in net.nodes:
        if node == net.source:
            continue
        tails = {c.tail for c in net.in_channels(node)}
        if len(tails) != 1 or len(net.in_channels(node)) != w:
            return None
        out = groups(net.out_channels(node))
        if node in net.sinks and out:
            return None
        if node not in net.sinks and (len(out) != 1 or set(out.values()) != {w}):
            return None

    starts = groups(net.out_channels(net.source))
    if set(starts.values()) - {w}:
        return None
    lengths: Dict[str, int] = {}
    for head in starts:
        node, count = head, 0
        while node not in net.sinks:
            node = net.out_channels(node)[0].head
            count += 1
        lengths[node] = count
    if set(lengths) != set(net.sinks):
        return None
    return lengths


def analyze_network(net: Network, w: int, q: int, strategy: str = 'first-found',
                    budget: int = Settings.DEFAULT_SEARCH_BUDGET, explain: bool = False) -> BoundReport:
    """
    Calcule toutes les bornes applicables pour (net, w, q).

    Args:
        net (Network): Réseau à analyser
        w (int): Débit
        q (int): Ordre du corps
        strategy (str): 'first-found' ou 'min-internal'
        budget (int): Budget de la recherche exhaustive de chemins minimaux
        explain (bool): Ajoute le listing des coupes au rapport

    Returns:
        BoundReport: Bornes réseau, bornes par puits, bornes inférieures et entrées

    Raises:
        NetworkValidationError: Réseau invalide
        CapacityError: w dépasse la coupe minimale d'un puits
        UnsupportedFieldError: Ordre de corps non supporté
    """
    factor_order(q)
    validate_network(net).raise_if_invalid()
    capacities = check_rate(net, w)

    collections = select_paths(net, w, strategy, budget)
    seq = build_cut_sequences(net, collections)
    l = seq.l  # noqa: E741
    transit = len(net.transit_nodes)
    certified = all(c.certified for c in collections)

    entries: List[BoundEntry] = [bound_network_cutwise(seq, q, w)]
    summary = {
        'a': compute_a(q, w),
        'l': l,
        'R': seq.R,
        'order': list(seq.order),
        'm': list(seq.m),
        'n': list(seq.n),
        'internal_nodes': len(net.internal_nodes),
        'transit_nodes': transit,
        'min_cut': capacities,
        'r': dict(seq.r),
        'sum_r': seq.total_r,
        'profiles': {t: sink_cut_profile(seq, t) for t in net.sinks},
        'paths': {c.sink: [list(p) for p in c.paths] for c in collections},
        'certified': certified,
    }

    if strategy == 'min-internal':
        baseline = select_paths(net, w, 'first-found')
        baseline_sum = sum(c.r for c in baseline)
        summary['sum_r_first_found'] = baseline_sum
        entries.append(bound_network_split(baseline_sum, l, q, w))
        minimal = bound_network_split(seq.total_r, l, q, w, bound_id='network_split_min_internal')
        if not certified:
            minimal = minimal.with_note('non-certified')
        entries.append(minimal)
    else:
        entries.append(bound_network_split(seq.total_r, l, q, w))
    entries.append(bound_network_internal_count(transit, l, q, w))

    for t in net.sinks:
        entries.append(bound_sink_cutwise(summary['profiles'][t], q, w, scope=t))
        entries.append(bound_sink_simple(seq.r[t], q, w, scope=t, r=seq.r[t]))
        entries.append(bound_sink_simple(transit, q, w, bound_id='sink_internal_count', scope=t,
                                         m=transit))
    entries.append(bound_sink_simple(transit, q, w, bound_id='sink_worst_case', m=transit, l=l))
    entries.extend(lower_bound_entries(lower_bounds(net, w, q), q, w))

    entries = _annotate_tightness(net, w, entries)
    report = BoundReport(net.name, q, w, strategy, entries, summary)
    if explain:
        report.explain = explain_cuts(seq)
    logger.info(f"Analyse de {net.name} : {len(entries)} bornes (q = {q}, w = {w})")
    return report


def _annotate_tightness(net: Network, w: int, entries: List[BoundEntry]) -> List[BoundEntry]:
    """Marque les bornes atteintes exactement par les tresses et leurs unions."""
    lengths = plait_chain_lengths(net, w)
    if lengths is None:
        return entries
    with_internal = [t for t, length in lengths.items() if length > 0]
    annotated = []
    for entry in entries:
        if entry.bound_id in ('sink_simple', 'sink_cutwise'):
            entry = entry.with_note(TIGHT)
        elif entry.bound_id == 'network_cutwise' and len(with_internal) <= 1:
            entry = entry.with_note(TIGHT)
        annotated.append(entry)
    return annotated
