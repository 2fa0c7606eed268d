"""
Conversion de ReportTable vers JSON et CSV.
"""
import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Union

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.models.data_model import ReportTable
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


def _json_default(value: Any) -> Any:
    """Fractions en 'p/q', tableaux numpy et autres scalaires en types natifs."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if hasattr(value, 'tolist'):
        return value.tolist()
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    return str(value)


def _csv_cell(value: Any) -> Any:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, ensure_ascii=False, sort_keys=True, default=_json_default)
    if value is None:
        return ''
    return value


class FormatConverter:
    """
    Convertisseur pour exporter un ReportTable en JSON ou en CSV.

    Attributes:
        data (ReportTable): Table à convertir

    Example:
        >>> converter = FormatConverter(table)
        >>> print(converter.to_json_text())
    """

    def __init__(self, data: ReportTable):
        """
        Initialise le convertisseur.

        Args:
            data (ReportTable): Table à convertir
        """
        self.data = data
        logger.debug(f"Convertisseur initialisé avec {len(data)} lignes")

    def to_json_text(self, indent: int = 2) -> str:
        """
        Document JSON complet (métadonnées, en-têtes, lignes), terminé par un saut de ligne.

        Args:
            indent (int, optional): Indentation. Défaut: 2
        """
        return json.dumps(self.data.to_dict(), indent=indent, ensure_ascii=False,
                          default=_json_default) + '\n'

    def to_csv_text(self, delimiter: str = ',', trailer: Optional[List[str]] = None) -> str:
        """
        Lignes de la table en CSV avec en-tête.

        Args:
            delimiter (str, optional): Séparateur. Défaut: ','
            trailer (List[str], optional): Lignes libres ajoutées après une ligne vide

        Example:
            >>> converter.to_csv_text(delimiter=';')
        """
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=self.data.headers, delimiter=delimiter,
                                lineterminator='\n')
        writer.writeheader()
        for row in self.data.rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        text = buffer.getvalue()
        if trailer:
            text += '\n' + '\n'.join(trailer) + '\n'
        return text

    def render(self, output_format: str, trailer: Optional[List[str]] = None) -> str:
        """
        Rendu texte dans le format demandé ('json' ou 'csv').

        Raises:
            ValueError: Si le format n'est pas supporté
        """
        if output_format == 'json':
            return self.to_json_text()
        if output_format == 'csv':
            return self.to_csv_text(trailer=trailer)
        raise ValueError(f"Format non supporté : {output_format}")

    def to_json(self, output_path: Union[str, Path], encoding: str = Settings.DEFAULT_ENCODING) -> None:
        """
        Exporte vers un fichier JSON.

        Args:
            output_path (str): Chemin du fichier de sortie
            encoding (str, optional): Encodage. Défaut: 'utf-8'
        """
        logger.info(f"Export JSON vers {output_path}")
        Path(output_path).write_text(self.to_json_text(), encoding=encoding)
        logger.info(f"Export JSON réussi : {len(self.data)} lignes écrites")

    def to_csv(self, output_path: Union[str, Path], delimiter: str = ',',
               encoding: str = Settings.DEFAULT_ENCODING, trailer: Optional[List[str]] = None) -> None:
        """
        Exporte vers un fichier CSV.

        Args:
            output_path (str): Chemin du fichier de sortie
            delimiter (str, optional): Séparateur. Défaut: ','
            encoding (str, optional): Encodage. Défaut: 'utf-8'
            trailer (List[str], optional): Lignes libres après le tableau
        """
        logger.info(f"Export CSV vers {output_path}")
        with open(output_path, 'w', newline='', encoding=encoding) as f:
            f.write(self.to_csv_text(delimiter, trailer))
        logger.info(f"Export CSV réussi : {len(self.data)} lignes écrites")
