"""
Suites de coupes le long des chemins choisis pour chaque puits.

Pour chaque puits t_i, la coupe CUT_{i,0} est formée des w canaux
imaginaires d1..dw. Les nœuds i_0 = s, i_1, ..., i_R (nœuds intermédiaires de
l'union des chemins, en ordre topologique) sont visités un à un : à i_k, les
canaux de la coupe qui entrent dans i_k sont remplacés par leurs successeurs
sur leurs chemins. Ces coupes ne sont pas des coupes au sens de la théorie
des graphes.

Une coupe est stockée par position : l'emplacement j contient le canal
courant du chemin P_{i,j}.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from rlnc_bounds.network.graph import topological_order
from rlnc_bounds.network.model import Network, PathCollection, imaginary_channel_ids
from rlnc_bounds.utils.exceptions import CutSequenceError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

Cut = Tuple[str, ...]


@dataclass(frozen=True)
class CutSequenceSet:
    """
    Coupes, ensembles sortants et profils (M_k, N_k) de tous les puits.

    Attributes:
        w (int): Débit
        order (Tuple[str, ...]): i_0 = s, i_1, ..., i_R
        sinks (Tuple[str, ...]): Puits, dans l'ordre du réseau
        cuts (Dict[str, Tuple[Cut, ...]]): CUT_{i,k} pour k = 0..R+1
        out_sets (Dict[str, Tuple[Cut, ...]]): CUT_{i,k} \\ In(i_k) pour
            k = 0..R, puis CUT_{i,R+1} \\ In(t_i)
        M (Tuple[Tuple[str, ...], ...]): Puits dont la coupe change en i_k
        N (Tuple[Tuple[str, ...], ...]): Puits de M_k dont la coupe devient finale
        r (Dict[str, int]): Nœuds intermédiaires distincts des chemins de chaque puits
        advances (Dict[str, Tuple[int, ...]]): Indices k où la coupe du puits change
    """
    w: int
    order: Tuple[str, ...]
    sinks: Tuple[str, ...]
    cuts: Dict[str, Tuple[Cut, ...]]
    out_sets: Dict[str, Tuple[Cut, ...]]
    M: Tuple[Tuple[str, ...], ...]
    N: Tuple[Tuple[str, ...], ...]
    r: Dict[str, int]
    advances: Dict[str, Tuple[int, ...]]

    @property
    def R(self) -> int:
        return len(self.order) - 1

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.sinks)

    @property
    def m(self) -> Tuple[int, ...]:
        return tuple(len(group) for group in self.M)

    @property
    def n(self) -> Tuple[int, ...]:
        return tuple(len(group) for group in self.N)

    @property
    def out_size(self) -> Dict[str, Tuple[int, ...]]:
        """|CUT_{i,k}^out| pour k = 0..R."""
        return {t: tuple(len(s) for s in sets[:-1]) for t, sets in self.out_sets.items()}

    @property
    def final_index(self) -> Dict[str, int]:
        """k tel que i_k est le dernier nœud intermédiaire sur les chemins du puits."""
        return {t: steps[-1] for t, steps in self.advances.items()}

    @property
    def total_r(self) -> int:
        """Σ r_i."""
        return sum(self.r.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'w': self.w,
            'order': list(self.order),
            'R': self.R,
            'sinks': list(self.sinks),
            'cuts': {t: [list(c) for c in cuts] for t, cuts in self.cuts.items()},
            'out_size': {t: list(sizes) for t, sizes in self.out_size.items()},
            'M': [list(g) for g in self.M],
            'N': [list(g) for g in self.N],
            'm': list(self.m),
            'n': list(self.n),
            'r': dict(self.r),
        }


def build_cut_sequences(net: Network, collections: Sequence[PathCollection]) -> CutSequenceSet:
    """
    Construit les suites de coupes pour une collection de chemins par puits.

    Args:
        net (Network): Réseau valide
        collections (Sequence[PathCollection]): Exactement une collection par puits

    Returns:
        CutSequenceSet: Coupes et profils ; les identités de comptage sont vérifiées

    Raises:
        CutSequenceError: Couverture des puits incorrecte, débits différents
            ou chemin incohérent avec l'ordre des nœuds
        PathError: Collection invalide pour le réseau
    """
    by_sink = {c.sink: c for c in collections}
    if len(by_sink) != len(collections) or set(by_sink) != set(net.sinks):
        raise CutSequenceError("Une collection de chemins par puits est requise")
    rates = {c.w for c in collections}
    if len(rates) != 1:
        raise CutSequenceError(f"Débits différents selon les puits : {sorted(rates)}")
    w = rates.pop()
    for collection in collections:
        collection.validate_against(net)

    position = {node: i for i, node in enumerate(topological_order(net))}
    union = set()
    for collection in collections:
        union.update(collection.internal_nodes)
    order = (net.source,) + tuple(sorted(union, key=position.__getitem__))
    imaginary = imaginary_channel_ids(w)

    slots = {t: [-1] * w for t in net.sinks}
    cuts: Dict[str, List[Cut]] = {t: [imaginary] for t in net.sinks}
    out_sets: Dict[str, List[Cut]] = {t: [] for t in net.sinks}
    advances: Dict[str, List[int]] = {t: [] for t in net.sinks}
    M: List[Tuple[str, ...]] = []
    N: List[Tuple[str, ...]] = []

    for k, node in enumerate(order):
        in_set = set(imaginary) if k == 0 else {c.id for c in net.in_channels(node)}
        changed, finished = [], []
        for t in net.sinks:
            paths = by_sink[t].paths
            current = cuts[t][-1]
            out_sets[t].append(tuple(c for c in current if c not in in_set))
            done = k > 0 and all(slots[t][j] == len(paths[j]) - 1 for j in range(w))
            moving = [j for j, cid in enumerate(current) if cid in in_set]
            # un puits relais traversé par d'autres chemins garde sa coupe finale
            if done or not moving:
                cuts[t].append(current)
                continue
            for j in moving:
                if slots[t][j] + 1 >= len(paths[j]):
                    raise CutSequenceError(
                        f"Le chemin {j + 1} de {t} se termine en {current[j]} avant {node}"
                    )
                slots[t][j] += 1
            cuts[t].append(tuple(paths[j][slots[t][j]] for j in range(w)))
            changed.append(t)
            advances[t].append(k)
            if all(slots[t][j] == len(paths[j]) - 1 for j in range(w)):
                finished.append(t)
        M.append(tuple(changed))
        N.append(tuple(finished))

    for t in net.sinks:
        final = cuts[t][-1]
        if final != by_sink[t].last_channels:
            raise CutSequenceError(f"La coupe finale de {t} n'est pas formée des derniers canaux")
        sink_in = {c.id for c in net.in_channels(t)}
        out_sets[t].append(tuple(c for c in final if c not in sink_in))

    seq = CutSequenceSet(
        w=w,
        order=order,
        sinks=tuple(net.sinks),
        cuts={t: tuple(c) for t, c in cuts.items()},
        out_sets={t: tuple(s) for t, s in out_sets.items()},
        M=tuple(M),
        N=tuple(N),
        r={t: by_sink[t].r for t in net.sinks},
        advances={t: tuple(a) for t, a in advances.items()},
    )
    check_identities(seq)
    logger.info(f"Coupes construites pour {net.name} : R = {seq.R}, Σr = {seq.total_r}")
    return seq


def check_identities(seq: CutSequenceSet) -> None:
    """
    Vérifie les identités de comptage d'une suite de coupes.

    Σ n_k = l, Σ m_k = Σ r_i + l, m_R = n_R, et chaque puits avance r_i + 1 fois.

    Raises:
        CutSequenceError: À la première identité violée
    """
    if sum(seq.n) != seq.l:
        raise CutSequenceError(f"Σ n_k = {sum(seq.n)} ≠ l = {seq.l}")
    if sum(seq.m) != seq.total_r + seq.l:
        raise CutSequenceError(f"Σ m_k = {sum(seq.m)} ≠ Σ r_i + l = {seq.total_r + seq.l}")
    if seq.m[seq.R] != seq.n[seq.R]:
        raise CutSequenceError(f"m_R = {seq.m[seq.R]} ≠ n_R = {seq.n[seq.R]}")
    for t in seq.sinks:
        if len(seq.advances[t]) != seq.r[t] + 1:
            raise CutSequenceError(f"La coupe de {t} avance {len(seq.advances[t])} fois, "
                                   f"{seq.r[t] + 1} attendu")
        if any(len(cut) != seq.w for cut in seq.cuts[t]):
            raise CutSequenceError(f"Coupe de {t} de taille différente de w = {seq.w}")


def sink_cut_profile(seq: CutSequenceSet, t: str) -> List[int]:
    """
    Tailles |CUT_{t,k}^out| aux r_t + 1 nœuds où la coupe de t avance.

    Raises:
        CutSequenceError: Si t n'est pas un puits de la suite
    """
    if t not in seq.advances:
        raise CutSequenceError(f"Puits inconnu : {t}")
    sizes = seq.out_size[t]
    return [sizes[k] for k in seq.advances[t]]


def _format_set(items: Sequence[str]) -> str:
    return '{' + ','.join(items) + '}' if items else '∅'


def explain_cuts(seq: CutSequenceSet) -> List[str]:
    """
    Listing des coupes dans la notation CUT_{i,k}={...}, CUT_{i,k}^out={...}.

    Les puits sont numérotés dans l'ordre du réseau ; suivent les lignes M_k et N_k.
    """
    lines = []
    for i, t in enumerate(seq.sinks, start=1):
        for k, (cut, out) in enumerate(zip(seq.cuts[t], seq.out_sets[t])):
            lines.append(f"CUT_{{{i},{k}}}={_format_set(cut)}, CUT_{{{i},{k}}}^out={_format_set(out)}")
    labels = {t: f"t_{i}" for i, t in enumerate(seq.sinks, start=1)}
    for k, (group_m, group_n) in enumerate(zip(seq.M, seq.N)):
        lines.append(f"M_{k}={_format_set([labels[t] for t in group_m])}, "
                     f"N_{k}={_format_set([labels[t] for t in group_n])}")
    return lines
