"""
Classe abstraite de base pour les parsers de fichiers réseau.
"""
from abc import ABC, abstractmethod
from pathlib import Path

from rlnc_bounds.config.settings import Settings


class BaseParser(ABC):
    """
    Classe abstraite définissant l'interface commune des parsers.

    Un parser concret doit implémenter parse() et validate().

    Example:
        >>> class MyParser(BaseParser):
        ...     def parse(self, file_path: str, **kwargs):
        ...         pass
        ...     def validate(self, file_path: str) -> bool:
        ...         return True
    """

    @abstractmethod
    def parse(self, file_path: str, **kwargs) -> 'Network':
        """
        Parse un fichier et retourne un Network.

        Args:
            file_path (str): Chemin vers le fichier à parser
            **kwargs: Arguments optionnels spécifiques au parser

        Returns:
            Network: Réseau construit

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            NetworkFormatError: Si le contenu est invalide
        """
        pass

    @abstractmethod
    def validate(self, file_path: str) -> bool:
        """
        Valide qu'un fichier peut être parsé.

        Args:
            file_path (str): Chemin vers le fichier

        Returns:
            bool: True si le fichier est valide, False sinon
        """
        pass

    def _read_file(self, file_path: str, encoding: str = Settings.DEFAULT_ENCODING) -> str:
        """
        Lit le contenu d'un fichier (méthode commune protégée).

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            UnicodeDecodeError: Si l'encodage est incorrect
        """
        file_path_obj = Path(file_path)

        if not file_path_obj.exists():
            raise FileNotFoundError(f"Le fichier {file_path} n'existe pas")

        with open(file_path, 'r', encoding=encoding) as f:
            return f.read()
