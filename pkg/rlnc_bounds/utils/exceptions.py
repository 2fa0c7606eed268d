"""
Exceptions personnalisées pour rlnc-bounds.

Chaque exception porte le code de sortie utilisé par la CLI et sait se
sérialiser en dictionnaire (pour le JSON d'erreur écrit sur stderr).
"""
from typing import Any, Dict, Optional


class RLNCError(Exception):
    """Exception de base du projet."""

    exit_code = 2

    def to_dict(self) -> Dict[str, Any]:
        """Représentation JSON de l'erreur."""
        return {'error': type(self).__name__, 'message': str(self)}


class FieldArithmeticError(RLNCError, ArithmeticError):
    """Levée pour une opération impossible dans le corps (inverse de zéro...)."""
    pass


class UnsupportedFieldError(RLNCError):
    """Levée quand l'ordre du corps demandé n'est pas supporté."""
    pass


class NetworkFormatError(RLNCError):
    """Levée quand un fichier réseau est mal formé."""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data['location'] = self.location
        return data


class NetworkValidationError(RLNCError):
    """Levée quand un réseau invalide est utilisé là où un réseau valide est requis."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data['violations'] = [str(v) for v in self.violations]
        return data


class CycleError(NetworkValidationError):
    """Levée quand le graphe des canaux contient un cycle."""
    pass


class CapacityError(RLNCError):
    """Levée quand le débit dépasse la capacité de coupe minimale d'un puits."""

    exit_code = 3

    def __init__(self, message: str, sink: Optional[str] = None, capacity: Optional[int] = None):
        super().__init__(message)
        self.sink = sink
        self.capacity = capacity

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({'sink': self.sink, 'capacity': self.capacity})
        return data


class PathError(RLNCError):
    """Levée quand une collection de chemins ne correspond pas au réseau."""
    pass


class CutSequenceError(RLNCError):
    """Levée quand la construction des coupes est incohérente."""
    pass


class CoefficientError(RLNCError):
    """Levée quand un coefficient local manque pour une paire de canaux."""

    def __init__(self, pair):
        super().__init__(f"Coefficient manquant pour la paire {pair[0]} -> {pair[1]}")
        self.pair = tuple(pair)


class EnumerationCapError(RLNCError):
    """Levée quand l'espace des coefficients dépasse le plafond d'énumération."""

    exit_code = 3

    def __init__(self, message: str, required: int, cap: int):
        super().__init__(message)
        self.required = required
        self.cap = cap

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({'required': self.required, 'cap': self.cap})
        return data


class GenerationError(RLNCError):
    """Levée quand le générateur aléatoire épuise son budget de rejet."""
    pass


class ConfigError(RLNCError):
    """Levée quand la configuration d'exécution est invalide."""
    pass
