"""
Configuration et gestion des logs.
"""
import logging

from rlnc_bounds.config.settings import Settings


class CustomLogger:
    """
    Gestionnaire de logs centralisé.

    Configure automatiquement les handlers pour console (stderr) et fichier.
    La sortie standard reste réservée aux rapports.
    """

    @staticmethod
    def setup_logger(name: str, level: int = logging.INFO) -> logging.Logger:
        """
        Configure et retourne un logger.

        Args:
            name (str): Nom du logger (généralement __name__)
            level (int, optional): Niveau de log. Défaut: INFO

        Returns:
            logging.Logger: Logger configuré

        Example:
            >>> logger = CustomLogger.setup_logger('rlnc_bounds.sim')
            >>> logger.info("Simulation terminée")
        """
        logger = logging.getLogger(name)

        # Éviter les doublons si déjà configuré
        if logger.handlers:
            return logger

        logger.setLevel(level)

        Settings.LOGS_DIR.mkdir(exist_ok=True)

        # Handler fichier : INFO et au-dessus
        file_handler = logging.FileHandler(Settings.LOG_FILE, encoding=Settings.DEFAULT_ENCODING)
        file_handler.setLevel(logging.INFO)

        # Handler console : WARNING et au-dessus
        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.WARNING)

        formatter = logging.Formatter(Settings.LOG_FORMAT, datefmt=Settings.LOG_DATE_FORMAT)
        file_handler.setFormatter(formatter)
        console_handler.setFormatter(formatter)

        logger.addHandler(file_handler)
        logger.addHandler(console_handler)

        return logger

    @staticmethod
    def set_level(level: int) -> None:
        """
        Applique un niveau à tous les loggers du package déjà configurés.

        Utilisé par la CLI pour --verbose / --quiet.

        Args:
            level (int): Niveau de log
        """
        console_level = level if level <= logging.DEBUG else max(level, logging.WARNING)
        for name, logger in logging.Logger.manager.loggerDict.items():
            if name.startswith('rlnc_bounds') and isinstance(logger, logging.Logger):
                logger.setLevel(level)
                for handler in logger.handlers:
                    if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                        handler.setLevel(console_level)
