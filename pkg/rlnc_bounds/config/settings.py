"""
Configuration globale de l'application.
"""
from pathlib import Path


class Settings:
    """
    Paramètres globaux de l'application.

    Contient les constantes et configurations utilisées partout dans le projet.
    """

    # Chemins
    BASE_DIR = Path(__file__).parent.parent
    LOGS_DIR = Path('logs')

    # Configuration des logs
    LOG_LEVEL = 'INFO'
    LOG_FORMAT = '[%(asctime)s] [%(levelname)s] [%(name)s] - %(message)s'
    LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
    LOG_FILE = LOGS_DIR / 'rlnc.log'

    # Fichiers réseau
    DEFAULT_ENCODING = 'utf-8'
    MAX_FILE_SIZE = 10 * 1024 * 1024  # 10 MB
    NETWORK_EXTENSION = '.json'

    # Corps finis
    MAX_FIELD_ORDER = 2 ** 16

    # Recherche de chemins et énumération
    DEFAULT_SEARCH_BUDGET = 10 ** 6
    DEFAULT_ENUMERATION_CAP = 10 ** 8

    # Monte Carlo
    CONFIDENCE_LEVEL = 0.95
    WILSON_THRESHOLD = 5
    BATCH_SIZE = 4096

    # Générateur aléatoire
    GENERATOR_MAX_ATTEMPTS = 1000

    # Formats de sortie
    OUTPUT_FORMATS = ['json', 'csv']
    PATH_STRATEGIES = ['first-found', 'min-internal']
