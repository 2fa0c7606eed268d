"""
Évaluation exacte (fractions.Fraction) des bornes sur la probabilité d'échec
du codage réseau linéaire aléatoire.

Toutes les bornes supérieures sont de la forme 1 − ∏ facteurs. La valeur brute
est toujours retournée ; une entrée est marquée invalide dès qu'un facteur
sort de [0, 1] (cas des petits corps, par exemple 1 − 2a < 0 pour q = 2, w = 2).
"""
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from rlnc_bounds.bounds.report import BoundEntry
from rlnc_bounds.cuts.sequences import CutSequenceSet
from rlnc_bounds.network.flow import check_rate
from rlnc_bounds.network.model import Network
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)

Factors = List[Tuple[Fraction, int]]


def _check_order(q: int) -> None:
    if q < 2:
        raise ValueError(f"Ordre de corps invalide : {q}")


def _one_minus(factors: Factors) -> Tuple[Fraction, bool]:
    """1 − ∏ f^e et validité (chaque facteur effectivement présent dans [0, 1])."""
    product = Fraction(1)
    valid = True
    for factor, exponent in factors:
        if exponent <= 0:
            continue
        if not 0 <= factor <= 1:
            valid = False
        product *= factor ** exponent
    return 1 - product, valid


def _entry(bound_id: str, factors: Factors, inputs: Dict[str, Any], scope: str = 'network') -> BoundEntry:
    value, valid = _one_minus(factors)
    if not valid:
        logger.warning(f"Borne {bound_id} ({scope}) invalide : facteur hors de [0, 1]")
    return BoundEntry(bound_id, value, valid, inputs, scope)


def cut_transition_probability(q: int, w: int, out_size: int) -> Fraction:
    """
    Probabilité que le passage d'une coupe à la suivante conserve le rang plein.

    Vaut ∏_{i=1}^{w − out_size} (1 − q^{-i}) : les w − out_size nouveaux
    noyaux doivent compléter les out_size noyaux conservés.

    Raises:
        ValueError: Si out_size n'est pas dans [0, w]
    """
    _check_order(q)
    if not 0 <= out_size <= w:
        raise ValueError(f"Taille d'ensemble sortant {out_size} hors de [0, {w}]")
    product = Fraction(1)
    for i in range(1, w - out_size + 1):
        product *= 1 - Fraction(1, q ** i)
    return product


def compute_a(q: int, w: int) -> Fraction:
    """
    Probabilité qu'une matrice uniforme w × w sur GF(q) soit singulière.

    a = 1 − ∏_{h=1}^{w} (1 − q^{-h}) ; a = 0 pour w = 0.

    Example:
        >>> compute_a(2, 2)
        Fraction(5, 8)
    """
    if w < 0:
        raise ValueError(f"Débit négatif : {w}")
    return 1 - cut_transition_probability(q, w, 0)


def spanning_probability(q: int, n: int, k0: int) -> Fraction:
    """
    Probabilité que n − k0 vecteurs uniformes de GF(q)^n complètent un
    sous-espace fixé de dimension k0 en une base.

    Vaut ∏_{i=1}^{n−k0} (1 − q^{-i}).

    Raises:
        ValueError: Si k0 > n ou k0 < 0
    """
    _check_order(q)
    if not 0 <= k0 <= n:
        raise ValueError(f"Dimension fixée {k0} hors de [0, {n}]")
    return cut_transition_probability(q, n, k0)


def bound_network_cutwise(seq: CutSequenceSet, q: int, w: int) -> BoundEntry:
    """
    Borne réseau coupe par coupe : 1 − (1−a)^l ∏_{k=0}^{R−1} [1 − (m_k − n_k)a].
    """
    a = compute_a(q, w)
    differences = [m - n for m, n in zip(seq.m[:seq.R], seq.n[:seq.R])]
    factors: Factors = [(1 - a, seq.l)]
    factors += [(1 - d * a, 1) for d in differences]
    inputs = {'q': q, 'w': w, 'l': seq.l, 'R': seq.R, 'm': list(seq.m), 'n': list(seq.n),
              'sum_r': seq.total_r}
    return _entry('network_cutwise', factors, inputs)


def split_path_sum(S: int, l: int) -> Tuple[int, int]:  # noqa: E741
    """Décomposition S = l·b + u avec 0 ≤ u ≤ l − 1."""
    if S < 0 or l < 1:
        raise ValueError(f"Paramètres invalides : S = {S}, l = {l}")
    return divmod(S, l)


def bound_network_split(S: int, l: int, q: int, w: int,  # noqa: E741
                        bound_id: str = 'network_split') -> BoundEntry:
    """
    Borne réseau à partir d'un total S de nœuds traversés :
    1 − (1−a)^l (1 − la)^b (1 − ua), où S = lb + u.

    S vaut Σr_i, ou tout n ≥ Σr_i (variante relâchée), ou ΣR_i calculé sur des
    collections minimales.
    """
    b, u = split_path_sum(S, l)
    a = compute_a(q, w)
    factors: Factors = [(1 - a, l), (1 - l * a, b), (1 - u * a, 1 if u else 0)]
    return _entry(bound_id, factors, {'q': q, 'w': w, 'l': l, 'S': S, 'b': b, 'u': u})


def bound_network_internal_count(m: int, l: int, q: int, w: int) -> BoundEntry:  # noqa: E741
    """
    Borne réseau ne dépendant que du nombre m ≥ |J| de nœuds internes :
    1 − (1−a)^l (1 − la)^m.
    """
    if m < 0 or l < 1:
        raise ValueError(f"Paramètres invalides : m = {m}, l = {l}")
    a = compute_a(q, w)
    return _entry('network_internal_count', [(1 - a, l), (1 - l * a, m)],
                  {'q': q, 'w': w, 'l': l, 'm': m})


def bound_sink_cutwise(profile: Sequence[int], q: int, w: int, scope: str = 'network') -> BoundEntry:
    """
    Borne puits coupe par coupe : 1 − ∏_k ∏_{i=1}^{w − |CUT_{t,k}^out|} (1 − q^{-i}).

    Tous les facteurs sont dans (0, 1] : la borne est toujours valide.
    """
    if not profile:
        raise ValueError("Profil de coupes vide")
    factors: Factors = [(cut_transition_probability(q, w, size), 1) for size in profile]
    inputs = {'q': q, 'w': w, 'r': len(profile) - 1, 'profile': list(profile)}
    return _entry('sink_cutwise', factors, inputs, scope)


def bound_sink_simple(exponent_base: int, q: int, w: int, bound_id: str = 'sink_simple',
                      scope: str = 'network', **inputs: Any) -> BoundEntry:
    """
    Borne puits 1 − (1−a)^{base+1}.

    base vaut r (nœuds intermédiaires du puits), un majorant n ≥ r, |J|, ou m
    pour la valeur maximale sur les réseaux à m nœuds internes (indépendante de l).
    """
    if exponent_base < 0:
        raise ValueError(f"Exposant négatif : {exponent_base}")
    a = compute_a(q, w)
    return _entry(bound_id, [(1 - a, exponent_base + 1)],
                  {'q': q, 'w': w, 'base': exponent_base, **inputs}, scope)


def lower_bound_value(q: int, delta: int) -> Fraction:
    """1 / q^{δ+1}."""
    _check_order(q)
    if delta < 0:
        raise ValueError(f"Redondance négative : {delta}")
    return Fraction(1, q ** (delta + 1))


def lower_bounds(net: Network, w: int, q: int) -> Dict[str, Any]:
    """
    Bornes inférieures 1/q^{δ_t+1} par puits et 1/q^{δ+1} pour le réseau,
    avec δ_t = C_t − w et δ = min_t δ_t.

    Returns:
        dict: {'sinks': {t: Fraction}, 'network': Fraction, 'delta': {t: δ_t}}

    Raises:
        CapacityError: Si w dépasse la coupe minimale d'un puits
    """
    capacities = check_rate(net, w)
    deltas = {t: capacities[t] - w for t in net.sinks}
    return {
        'sinks': {t: lower_bound_value(q, d) for t, d in deltas.items()},
        'network': lower_bound_value(q, min(deltas.values())),
        'delta': deltas,
    }


def lower_bound_entries(bounds: Dict[str, Any], q: int, w: int) -> List[BoundEntry]:
    """Entrées de rapport pour le résultat de lower_bounds."""
    entries = [
        BoundEntry('lower_sink', value, True, {'q': q, 'w': w, 'delta': bounds['delta'][t]}, t)
        for t, value in bounds['sinks'].items()
    ]
    entries.append(BoundEntry('lower_network', bounds['network'], True,
                              {'q': q, 'w': w, 'delta': min(bounds['delta'].values())}))
    return entries

