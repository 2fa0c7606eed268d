"""
Validation et vérification des fichiers réseau.
"""
from pathlib import Path

from rlnc_bounds.config.settings import Settings


class FileValidator:
    """
    Utilitaires pour valider les fichiers avant parsing.
    """

    @staticmethod
    def is_readable(file_path: str) -> bool:
        """
        Vérifie si un fichier est lisible.

        Args:
            file_path (str): Chemin du fichier

        Returns:
            bool: True si le fichier existe et est un fichier régulier
        """
        path = Path(file_path)
        return path.exists() and path.is_file()

    @staticmethod
    def get_size(file_path: str) -> int:
        """Retourne la taille du fichier en octets."""
        return Path(file_path).stat().st_size

    @staticmethod
    def is_within_size_limit(file_path: str) -> bool:
        """
        Vérifie que le fichier ne dépasse pas Settings.MAX_FILE_SIZE.

        Args:
            file_path (str): Chemin du fichier

        Returns:
            bool: True si la taille est acceptable
        """
        return FileValidator.get_size(file_path) <= Settings.MAX_FILE_SIZE

    @staticmethod
    def has_network_extension(file_path: str) -> bool:
        """Vérifie l'extension attendue pour un fichier réseau (.json)."""
        return Path(file_path).suffix.lower() == Settings.NETWORK_EXTENSION
