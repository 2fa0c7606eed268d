"""
Configuration d'exécution validée, construite à partir des arguments de la CLI.
"""
import argparse
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from rlnc_bounds.bounds.asymptotics import SWEEP_BOUNDS
from rlnc_bounds.config.settings import Settings
from rlnc_bounds.gfield.field import factor_order
from rlnc_bounds.utils.exceptions import ConfigError

COMMANDS = ['analyze', 'simulate', 'enumerate', 'generate', 'sweep']
FAMILIES = ['butterfly', 'plait', 'plait-union', 'random']
NETWORK_COMMANDS = ('analyze', 'simulate', 'enumerate')


def parse_fields(text: str) -> List[int]:
    """
    Liste d'ordres de corps séparés par des virgules ; accepte la notation 2^k.

    Example:
        >>> parse_fields('2^8,4096')
        [256, 4096]
    """
    orders = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        try:
            if '^' in item:
                base, exponent = item.split('^', 1)
                orders.append(int(base) ** int(exponent))
            else:
                orders.append(int(item))
        except ValueError:
            raise ConfigError(f"Ordre de corps illisible : {item}") from None
    return orders


@dataclass
class RunConfig:
    """
    Paramètres d'une commande.

    Attributes:
        command (str): Sous-commande (analyze, simulate, enumerate, generate, sweep)
        network (str, optional): Chemin du fichier réseau
        w (int, optional): Débit
        q (int, optional): Ordre du corps
        trials (int): Essais Monte Carlo
        seed (int): Graine maîtresse
        workers (int): Processus pour simulate et enumerate
        strategy (str): 'first-found' ou 'min-internal'
        output_format (str): 'json' ou 'csv'
        cap (int): Plafond d'énumération
        budget (int): Budget de recherche des chemins minimaux
        explain (bool): Listing des coupes pour analyze
        fields (List[int]): Ordres de corps du balayage
        family (str, optional): Famille à générer
        out (str, optional): Fichier réseau de generate, fichier de rapport sinon
        bound (str, optional): Borne balayée par sweep
        params (Dict[str, Optional[int]]): Paramètres de famille ou de borne
            (r, l, layers, width, n, m, delta)
    """
    command: str
    network: Optional[str] = None
    w: Optional[int] = None
    q: Optional[int] = None
    trials: int = 10 ** 5
    seed: int = 0
    workers: int = 1
    strategy: str = 'first-found'
    output_format: str = 'json'
    cap: int = Settings.DEFAULT_ENUMERATION_CAP
    budget: int = Settings.DEFAULT_SEARCH_BUDGET
    explain: bool = False
    fields: List[int] = field(default_factory=list)
    family: Optional[str] = None
    out: Optional[str] = None
    bound: Optional[str] = None
    params: Dict[str, Optional[int]] = field(default_factory=dict)

    def __post_init__(self):
        """
        Raises:
            ConfigError: Paramètre manquant ou hors domaine
            UnsupportedFieldError: Ordre de corps non supporté
        """
        if self.command not in COMMANDS:
            raise ConfigError(f"Commande inconnue : {self.command}")
        if self.output_format not in Settings.OUTPUT_FORMATS:
            raise ConfigError(f"Format de sortie inconnu : {self.output_format}")
        if self.strategy not in Settings.PATH_STRATEGIES:
            raise ConfigError(f"Stratégie de chemins inconnue : {self.strategy}")
        if self.workers < 1:
            raise ConfigError(f"Nombre de processus invalide : {self.workers}")
        if self.seed < 0:
            raise ConfigError(f"Graine invalide : {self.seed} (entier ≥ 0 attendu)")

        if self.command in NETWORK_COMMANDS:
            if not self.network:
                raise ConfigError(f"{self.command} : --network est requis")
            if self.w is None or self.w < 1:
                raise ConfigError(f"Débit invalide : {self.w} (w ≥ 1 attendu)")
            if self.q is None:
                raise ConfigError(f"{self.command} : --field est requis")
            factor_order(self.q)
        if self.command == 'simulate' and self.trials < 1:
            raise ConfigError(f"Nombre d'essais invalide : {self.trials}")
        if self.command == 'enumerate' and self.cap < 1:
            raise ConfigError(f"Plafond d'énumération invalide : {self.cap}")
        if self.budget < 1:
            raise ConfigError(f"Budget de recherche invalide : {self.budget}")

        if self.command == 'generate':
            if self.family not in FAMILIES:
                raise ConfigError(f"Famille inconnue : {self.family} (attendu : {', '.join(FAMILIES)})")
        if self.command == 'sweep':
            if self.bound not in SWEEP_BOUNDS:
                raise ConfigError(f"Borne inconnue : {self.bound} (attendu : {', '.join(SWEEP_BOUNDS)})")
            if not self.fields:
                raise ConfigError("sweep : --fields doit contenir au moins un ordre")
            for q in self.fields:
                factor_order(q)

        negative = [k for k, v in self.params.items() if v is not None and v < 0]
        if negative:
            raise ConfigError(f"Paramètres négatifs : {', '.join(sorted(negative))}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        """Construit la configuration à partir de l'espace de noms argparse."""
        def get(name, default=None):
            value = getattr(args, name, None)
            return default if value is None else value

        params = {name: getattr(args, name, None)
                  for name in ('r', 'l', 'layers', 'width', 'n', 'm', 'delta')}
        fields = get('fields', '')
        return cls(
            command=args.command,
            network=get('network'),
            w=get('rate'),
            q=get('field'),
            trials=get('trials', 10 ** 5),
            seed=get('seed', 0),
            workers=get('workers', 1),
            strategy=get('strategy', 'first-found'),
            output_format=get('format', 'json'),
            cap=get('cap', Settings.DEFAULT_ENUMERATION_CAP),
            budget=get('budget', Settings.DEFAULT_SEARCH_BUDGET),
            explain=bool(get('explain', False)),
            fields=parse_fields(fields) if isinstance(fields, str) else list(fields),
            family=get('family'),
            out=get('out'),
            bound=get('bound'),
            params=params,
        )
