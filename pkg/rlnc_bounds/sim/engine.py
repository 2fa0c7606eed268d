"""
Codage réseau linéaire aléatoire : coefficients locaux, propagation des
noyaux globaux et rang des matrices de décodage.

Les coefficients sont indexés par les paires adjacentes (d, e), d ∈ In(i),
e ∈ Out(i). Leur ordre (« ordre odomètre ») est fixé une fois pour toutes :
    1. position de la queue i dans l'ordre topologique ;
    2. position de d parmi In(i), les canaux imaginaires d1..dw en premier ;
    3. position de e parmi Out(i).
La dernière paire varie le plus vite lors de l'énumération exhaustive.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from rlnc_bounds.gfield.field import FieldElement, GaloisField, get_field
from rlnc_bounds.gfield.matrix import MatrixGF, batch_rank
from rlnc_bounds.network.graph import topological_order
from rlnc_bounds.network.model import Network, imaginary_channel_ids
from rlnc_bounds.sim.results import TrialOutcome
from rlnc_bounds.utils.exceptions import CoefficientError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

Pair = Tuple[str, str]
Counts = Tuple[Dict[str, int], int]


@dataclass(frozen=True)
class KernelAssignment:
    """
    Noyaux globaux f_e de tous les canaux, imaginaires compris.

    Attributes:
        kernels (Dict[str, Tuple[int, ...]]): Canal → vecteur colonne de taille w
        field (GaloisField): Corps de base
        w (int): Débit
    """
    kernels: Dict[str, Tuple[int, ...]]
    field: GaloisField
    w: int

    def __getitem__(self, channel_id: str) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(v, self.field) for v in self.kernels[channel_id])

    def values(self, channel_id: str) -> Tuple[int, ...]:
        return self.kernels[channel_id]


class CodingEngine:
    """
    Plan de propagation précalculé pour (réseau, débit, corps).

    Attributes:
        net (Network): Réseau valide
        w (int): Débit
        field (GaloisField): Corps de base
        pairs (List[Pair]): Paires (d, e) dans l'ordre odomètre

    Example:
        >>> engine = CodingEngine(gen_plait(2, 1), 2, get_field(2))
        >>> engine.free_coefficients
        8
    """

    def __init__(self, net: Network, w: int, field: GaloisField):
        self.net = net
        self.w = w
        self.field = field
        self.imaginary = imaginary_channel_ids(w)
        self.columns: Dict[str, int] = {d: j for j, d in enumerate(self.imaginary)}
        for c in net.channels:
            self.columns[c.id] = w + net.channel_index[c.id]

        self.pairs: List[Pair] = []
        self._plan: List[Tuple[int, List[Tuple[int, int]]]] = []
        for node in topological_order(net):
            incoming = self.in_ids(node)
            outgoing = [c.id for c in net.out_channels(node)]
            start = len(self.pairs)
            self.pairs.extend((d, e) for d in incoming for e in outgoing)
            for j, e in enumerate(outgoing):
                terms = [(start + i * len(outgoing) + j, self.columns[d]) for i, d in enumerate(incoming)]
                self._plan.append((self.columns[e], terms))
        self.pair_index: Dict[Pair, int] = {pair: i for i, pair in enumerate(self.pairs)}
        logger.debug(f"Moteur pour {net.name} : {len(self.pairs)} coefficients sur GF({field.order})")

    def in_ids(self, node: str) -> List[str]:
        """In(node), les canaux imaginaires tenant lieu d'entrées de la source."""
        if node == self.net.source:
            return list(self.imaginary)
        return [c.id for c in self.net.in_channels(node)]

    @property
    def free_coefficients(self) -> int:
        return len(self.pairs)

    def coefficient_vector(self, coefficients: Mapping[Pair, object]) -> np.ndarray:
        """
        Vecteur des coefficients dans l'ordre odomètre.

        Raises:
            CoefficientError: Si une paire adjacente n'a pas de coefficient
        """
        values = np.zeros(len(self.pairs), dtype=np.int64)
        for i, pair in enumerate(self.pairs):
            if pair not in coefficients:
                logger.error(f"Coefficient manquant : {pair[0]} -> {pair[1]}")
                raise CoefficientError(pair)
            value = coefficients[pair]
            values[i] = value.value if isinstance(value, FieldElement) else int(value)
        return values

    # --- propagation scalaire -------------------------------------------

    def propagate(self, coefficients: np.ndarray) -> KernelAssignment:
        """
        Propage les noyaux pour une affectation, en arithmétique scalaire.

        Args:
            coefficients (np.ndarray): Un coefficient par paire, ordre odomètre
        """
        gf = self.field
        vectors: List[List[int]] = [[0] * self.w for _ in range(self.w + len(self.net.channels))]
        for j in range(self.w):
            vectors[j][j] = 1
        for column, terms in self._plan:
            acc = [0] * self.w
            for pair_idx, source_col in terms:
                k = int(coefficients[pair_idx])
                if k == 0:
                    continue
                acc = [gf.add(x, gf.mul(k, y)) for x, y in zip(acc, vectors[source_col])]
            vectors[column] = acc
        kernels = {cid: tuple(vectors[col]) for cid, col in self.columns.items()}
        return KernelAssignment(kernels, gf, self.w)

    # --- propagation par lots -------------------------------------------

    def propagate_batch(self, coefficients: np.ndarray) -> np.ndarray:
        """
        Propage les noyaux pour un lot d'affectations.

        Args:
            coefficients (np.ndarray): Forme (B, N)

        Returns:
            np.ndarray: Noyaux de forme (B, w + |E|, w), colonnes dans l'ordre
            d1..dw puis canaux réels dans l'ordre du réseau
        """
        gf = self.field
        batch = coefficients.shape[0]
        kernels = np.zeros((batch, self.w + len(self.net.channels), self.w), dtype=np.int64)
        for j in range(self.w):
            kernels[:, j, j] = 1
        for column, terms in self._plan:
            acc = np.zeros((batch, self.w), dtype=np.int64)
            for pair_idx, source_col in terms:
                acc = gf.add_array(acc, gf.mul_array(coefficients[:, pair_idx, None], kernels[:, source_col, :]))
            kernels[:, column, :] = acc
        return kernels

    def sink_ranks_batch(self, kernels: np.ndarray) -> Dict[str, np.ndarray]:
        """Rang de F_t pour chaque puits et chaque affectation du lot."""
        ranks = {}
        for t in self.net.sinks:
            columns = [kernels[:, self.columns[c.id], :] for c in self.net.in_channels(t)]
            ranks[t] = batch_rank(self.field, columns, self.w, batch=kernels.shape[0])
        return ranks

    def failure_counts(self, coefficients: np.ndarray) -> Tuple[Dict[str, int], int]:
        """
        Nombre d'échecs par puits et pour le réseau sur un lot d'affectations.

        Returns:
            Tuple[Dict[str, int], int]: (échecs par puits, échecs réseau)
        """
        ranks = self.sink_ranks_batch(self.propagate_batch(coefficients))
        failed = {t: r < self.w for t, r in ranks.items()}
        network = np.zeros(coefficients.shape[0], dtype=bool)
        for mask in failed.values():
            network |= mask
        return {t: int(mask.sum()) for t, mask in failed.items()}, int(network.sum())


def count_free_coefficients(net: Network, w: int) -> int:
    """
    Nombre de coefficients locaux : Σ_i |In(i)|·|Out(i)| avec |In(s)| = w.
    """
    total = 0
    for node in net.nodes:
        fan_in = w if node == net.source else len(net.in_channels(node))
        total += fan_in * len(net.out_channels(node))
    return total


def propagate_kernels(net: Network, w: int, coefficients: Mapping[Pair, FieldElement],
                      field: Optional[GaloisField] = None) -> KernelAssignment:
    """
    Noyaux globaux pour une affectation explicite des coefficients locaux.

    Args:
        net (Network): Réseau valide
        w (int): Débit
        coefficients (Mapping[Pair, FieldElement]): k_{d,e} pour chaque paire adjacente
        field (GaloisField, optional): Corps, déduit des coefficients si absent

    Raises:
        CoefficientError: En nommant la première paire sans coefficient
    """
    if field is None:
        sample = next((v for v in coefficients.values() if isinstance(v, FieldElement)), None)
        if sample is None:
            raise ValueError("Impossible de déduire le corps : aucun coefficient fourni")
        field = sample.field
    engine = CodingEngine(net, w, field)
    return engine.propagate(engine.coefficient_vector(coefficients))


def decoding_matrix(kernels: KernelAssignment, net: Network, t: str) -> MatrixGF:
    """
    F_t : matrice w × |In(t)| des noyaux des canaux entrant dans t, dans
    l'ordre du réseau.
    """
    columns = [kernels.values(c.id) for c in net.in_channels(t)]
    return MatrixGF.from_columns(columns, kernels.w, kernels.field)


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Générateur de l'essai trial_index, fonction pure de (seed, trial_index)."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,)))


def run_trial(net: Network, w: int, field: GaloisField, rng: np.random.Generator,
              engine: Optional[CodingEngine] = None) -> TrialOutcome:
    """
    Un essai : tirage uniforme de tous les coefficients, propagation, rangs.

    Déterministe pour un état de générateur donné.
    """
    engine = engine or CodingEngine(net, w, field)
    coefficients = field.random_values(rng, engine.free_coefficients)[None, :]
    ranks = engine.sink_ranks_batch(engine.propagate_batch(coefficients))
    return TrialOutcome({t: int(r[0]) for t, r in ranks.items()}, w)


@lru_cache(maxsize=8)
def cached_engine(net: Network, w: int, q: int) -> CodingEngine:
    """Moteur réutilisé par les blocs d'un même processus."""
    return CodingEngine(net, w, get_field(q))


def index_blocks(total: int, size: int) -> List[Tuple[int, int]]:
    """Découpe [0, total) en plages consécutives de taille au plus size."""
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def merge_counts(net: Network, parts: List[Counts]) -> Counts:
    """Somme des comptes d'échecs partiels ; l'ordre des parties est indifférent."""
    sinks = {t: 0 for t in net.sinks}
    network = 0
    for sink_counts, network_count in parts:
        for t, count in sink_counts.items():
            sinks[t] += count
        network += network_count
    return sinks, network
