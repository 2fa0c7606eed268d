"""
Entrées et rapports de bornes, sérialisables en ReportTable.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from rlnc_bounds.models.data_model import ReportTable

BOUND_HEADERS = ['bound_id', 'scope', 'numerator', 'denominator', 'float', 'probability',
                 'valid', 'note', 'inputs']


@dataclass(frozen=True)
class BoundEntry:
    """
    Valeur exacte d'une borne et les paramètres qui l'ont produite.

    Attributes:
        bound_id (str): Identifiant stable (network_cutwise, sink_simple, ...)
        value (Fraction): Valeur brute, jamais tronquée à [0, 1]
        valid (bool): True si chaque facteur du produit est dans [0, 1]
        inputs (Dict[str, Any]): Paramètres utilisés (q, w, l, profils, ...)
        scope (str): 'network' ou identifiant du puits
        note (str): Annotation libre (tight-by-construction, non-certified, ...)
    """
    bound_id: str
    value: Fraction
    valid: bool
    inputs: Dict[str, Any] = field(default_factory=dict)
    scope: str = 'network'
    note: str = ''

    @property
    def float_value(self) -> float:
        return float(self.value)

    @property
    def probability(self) -> Optional[float]:
        """La valeur en tant que probabilité, ou None si la borne est invalide."""
        return float(self.value) if self.valid else None

    def with_note(self, note: str) -> 'BoundEntry':
        merged = f"{self.note}; {note}" if self.note else note
        return BoundEntry(self.bound_id, self.value, self.valid, self.inputs, self.scope, merged)

    def to_row(self) -> Dict[str, Any]:
        return {
            'bound_id': self.bound_id,
            'scope': self.scope,
            'numerator': self.value.numerator,
            'denominator': self.value.denominator,
            'float': self.float_value,
            'probability': self.probability,
            'valid': self.valid,
            'note': self.note,
            'inputs': self.inputs,
        }


@dataclass
class BoundReport:
    """
    Rapport complet d'analyse d'un réseau.

    Attributes:
        network (str): Nom du réseau
        q (int): Ordre du corps
        w (int): Débit
        strategy (str): Stratégie de sélection des chemins
        entries (List[BoundEntry]): Bornes supérieures et inférieures
        summary (Dict[str, Any]): Entrées structurelles (R, Σr_i, |J|, profils, C_t...)
        explain (List[str]): Listing des coupes, vide si non demandé
    """
    network: str
    q: int
    w: int
    strategy: str
    entries: List[BoundEntry] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    explain: List[str] = field(default_factory=list)

    def get(self, bound_id: str, scope: str = 'network') -> BoundEntry:
        """
        Raises:
            KeyError: Si aucune entrée ne correspond
        """
        for entry in self.entries:
            if entry.bound_id == bound_id and entry.scope == scope:
                return entry
        raise KeyError(f"{bound_id} ({scope})")

    def ids(self) -> List[str]:
        return [entry.bound_id for entry in self.entries]

    def to_table(self) -> ReportTable:
        metadata = {
            'command': 'analyze',
            'network': self.network,
            'q': self.q,
            'w': self.w,
            'strategy': self.strategy,
            **self.summary,
        }
        if self.explain:
            metadata['explain'] = list(self.explain)
        return ReportTable(
            headers=list(BOUND_HEADERS),
            rows=[entry.to_row() for entry in self.entries],
            metadata=metadata,
        )
