"""
Modèle tabulaire commun à tous les rapports (bornes, simulations, balayages).
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class ReportTable:
    """
    Rapport sous forme de table, exportable en JSON ou en CSV.

    Aucune date n'est ajoutée aux métadonnées : deux exécutions identiques
    produisent des rapports identiques octet par octet.

    Attributes:
        headers (List[str]): Noms des colonnes
        rows (List[Dict[str, Any]]): Lignes, une par borne ou par puits
        metadata (Dict[str, Any]): Commande, paramètres et résultats globaux

    Example:
        >>> table = ReportTable(
        ...     headers=['q', 'value'],
        ...     rows=[{'q': 2, 'value': '5/8'}],
        ...     metadata={'command': 'sweep'}
        ... )
        >>> len(table)
        1
    """
    headers: List[str]
    rows: List[Dict[str, Any]]
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            unknown = set(row) - set(self.headers)
            if unknown:
                raise ValueError(f"Ligne {i} : colonnes inconnues {sorted(unknown)}")

    def to_dict(self) -> Dict[str, Any]:
        """
        Convertit la table en dictionnaire.

        Returns:
            dict: Métadonnées, en-têtes et lignes
        """
        return {
            'metadata': self.metadata,
            'headers': self.headers,
            'rows': self.rows,
        }

    def column(self, name: str) -> List[Any]:
        """Valeurs d'une colonne, dans l'ordre des lignes."""
        if name not in self.headers:
            raise KeyError(name)
        return [row.get(name) for row in self.rows]

    def __len__(self) -> int:
        """Retourne le nombre de lignes."""
        return len(self.rows)

    def __getitem__(self, index: int) -> Dict[str, Any]:
        """Permet l'accès par index : table[0]"""
        return self.rows[index]

    def __iter__(self):
        """Permet l'itération : for row in table:"""
        return iter(self.rows)
