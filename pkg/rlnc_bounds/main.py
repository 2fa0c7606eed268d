"""
Point d'entrée CLI pour rlnc-bounds.

Commandes disponibles :
    - analyze : Bornes exactes sur la probabilité d'échec d'un réseau
    - simulate : Estimation Monte Carlo des probabilités d'échec
    - enumerate : Probabilités exactes par énumération des coefficients
    - generate : Génération d'un réseau (papillon, tresse, union, aléatoire)
    - sweep : Comportement de q·borne quand l'ordre du corps croît

Les rapports sont écrits sur stdout (JSON ou CSV) ou dans --out, les erreurs sur stderr
sous forme d'un objet JSON.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, Tuple

from rlnc_bounds import __version__
from rlnc_bounds.bounds.analysis import analyze_network
from rlnc_bounds.bounds.asymptotics import SWEEP_BOUNDS, asymptotic_sweep
from rlnc_bounds.config.run_config import FAMILIES, RunConfig
from rlnc_bounds.config.settings import Settings
from rlnc_bounds.converters.format_converter import FormatConverter
from rlnc_bounds.cuts.sequences import build_cut_sequences
from rlnc_bounds.generators.families import gen_butterfly, gen_plait, gen_plait_union
from rlnc_bounds.generators.random_layered import gen_layered_random
from rlnc_bounds.gfield.field import get_field
from rlnc_bounds.models.data_model import ReportTable
from rlnc_bounds.network.flow import check_rate, select_paths, summarize_network
from rlnc_bounds.network.graph import validate_network
from rlnc_bounds.network.model import Network
from rlnc_bounds.parsers.network_parser import read_network, serialize_network, write_network
from rlnc_bounds.sim.exhaustive import enumerate_exact
from rlnc_bounds.sim.montecarlo import monte_carlo
from rlnc_bounds.utils.exceptions import ConfigError, RLNCError
from rlnc_bounds.utils.logger import CustomLogger

Output = Tuple[ReportTable, Optional[List[str]]]


def setup_argparse() -> argparse.ArgumentParser:
    """Configure et retourne le parser d'arguments."""

    parser = argparse.ArgumentParser(
        prog='rlnc-bounds',
        description='Bornes sur la probabilité d\'échec du codage réseau linéaire aléatoire',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--verbose', '-v', action='store_true', help='Mode verbeux (logs DEBUG)')
    parser.add_argument('--quiet', '-q', action='store_true', help='Mode silencieux (logs ERROR uniquement)')

    subparsers = parser.add_subparsers(dest='command', help='Commandes disponibles')

    def network_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument('--network', required=True, help='Fichier réseau (.json)')
        sub.add_argument('--rate', type=int, required=True, help='Débit w')
        sub.add_argument('--field', type=int, required=True, help='Ordre q du corps')
        sub.add_argument('--format', choices=Settings.OUTPUT_FORMATS, default='json',
                         help='Format du rapport. Défaut: json')
        sub.add_argument('--out', '-o', help='Fichier de rapport (sinon stdout)')

    analyze = subparsers.add_parser('analyze', help='Calculer toutes les bornes')
    network_options(analyze)
    analyze.add_argument('--strategy', choices=Settings.PATH_STRATEGIES, default='first-found',
                         help='Sélection des chemins. Défaut: first-found')
    analyze.add_argument('--budget', type=int, default=Settings.DEFAULT_SEARCH_BUDGET,
                         help='Budget de la recherche exhaustive de chemins minimaux')
    analyze.add_argument('--explain', action='store_true', help='Ajouter le listing des coupes')

    simulate = subparsers.add_parser('simulate', help='Estimation Monte Carlo')
    network_options(simulate)
    simulate.add_argument('--trials', type=int, default=10 ** 5, help='Nombre d\'essais')
    simulate.add_argument('--seed', type=int, default=0, help='Graine maîtresse')
    simulate.add_argument('--workers', type=int, default=1, help='Nombre de processus')

    enumerate_ = subparsers.add_parser('enumerate', help='Probabilités exactes par énumération')
    network_options(enumerate_)
    enumerate_.add_argument('--cap', type=int, default=Settings.DEFAULT_ENUMERATION_CAP,
                            help='Nombre maximal d\'affectations')
    enumerate_.add_argument('--workers', type=int, default=1, help='Nombre de processus')

    generate = subparsers.add_parser('generate', help='Générer un réseau')
    generate.add_argument('family', choices=FAMILIES, help='Famille de réseau')
    generate.add_argument('--w', '--rate', dest='rate', type=int, help='Canaux par étage / débit visé')
    generate.add_argument('--r', '--R', dest='r', type=int, help='Nœuds internes de la tresse')
    generate.add_argument('--l', '--sinks', dest='l', type=int, help='Nombre de puits')
    generate.add_argument('--layers', type=int, help='Couches (random)')
    generate.add_argument('--width', type=int, help='Nœuds par couche (random)')
    generate.add_argument('--seed', type=int, default=0, help='Graine (random)')
    generate.add_argument('--out', '-o', help='Fichier réseau à écrire')

    sweep = subparsers.add_parser('sweep', help='Balayage de q·borne sur des ordres de corps')
    sweep.add_argument('--bound', choices=SWEEP_BOUNDS, required=True, help='Borne à balayer')
    sweep.add_argument('--fields', required=True, help='Ordres de corps, ex. 2^8,2^12,2^16')
    sweep.add_argument('--network', help='Réseau fournissant n = Σr_i, m et l par défaut')
    sweep.add_argument('--rate', type=int, help='Débit w')
    sweep.add_argument('--n', type=int, help='Majorant de Σr_i')
    sweep.add_argument('--m', type=int, help='Nombre de nœuds internes')
    sweep.add_argument('--r', type=int, help='Nœuds intermédiaires du puits')
    sweep.add_argument('--sinks', dest='l', type=int, help='Nombre de puits l')
    sweep.add_argument('--delta', type=int, help='Redondance δ = C_t − w')
    sweep.add_argument('--format', choices=Settings.OUTPUT_FORMATS, default='json',
                       help='Format du rapport. Défaut: json')
    sweep.add_argument('--out', '-o', help='Fichier de rapport (sinon stdout)')

    return parser


def load_network(path: str) -> Network:
    """Lit un réseau et vérifie sa validité structurelle."""
    net = read_network(path)
    validate_network(net).raise_if_invalid()
    return net


def command_analyze(config: RunConfig, logger: logging.Logger) -> Output:
    """Commande analyze : rapport complet des bornes."""

    logger.info(f"Analyse de {config.network} (w = {config.w}, q = {config.q})")
    net = load_network(config.network)
    report = analyze_network(net, config.w, config.q, config.strategy, config.budget, config.explain)
    return report.to_table(), report.explain or None


def command_simulate(config: RunConfig, logger: logging.Logger) -> Output:
    """Commande simulate : estimation Monte Carlo."""

    logger.info(f"Simulation de {config.network} : {config.trials} essais, graine {config.seed}")
    net = load_network(config.network)
    result = monte_carlo(net, config.w, get_field(config.q), config.trials, config.seed, config.workers)
    return result.to_table(), None


def command_enumerate(config: RunConfig, logger: logging.Logger) -> Output:
    """Commande enumerate : probabilités exactes."""

    logger.info(f"Énumération de {config.network} (w = {config.w}, q = {config.q})")
    net = load_network(config.network)
    check_rate(net, config.w)
    result = enumerate_exact(net, config.w, get_field(config.q), config.cap, config.workers)
    return result.to_table(), None


def _require(config: RunConfig, *names: str) -> List[int]:
    values = []
    for name in names:
        value = config.w if name == 'w' else config.params.get(name)
        if value is None:
            option = '--w' if name == 'w' else f'--{name}'
            raise ConfigError(f"{config.command} {config.family or config.bound} : {option} est requis")
        values.append(value)
    return values


def build_family(config: RunConfig) -> Network:
    """Construit le réseau demandé par generate."""
    if config.family == 'butterfly':
        return gen_butterfly()
    if config.family == 'plait':
        w, r = _require(config, 'w', 'r')
        return gen_plait(w, r)
    if config.family == 'plait-union':
        w, r, l = _require(config, 'w', 'r', 'l')  # noqa: E741
        return gen_plait_union(w, r, l)
    layers, width, w, l = _require(config, 'layers', 'width', 'w', 'l')  # noqa: E741
    return gen_layered_random(layers, width, w, l, config.seed)


def command_generate(config: RunConfig, logger: logging.Logger) -> Optional[Output]:
    """Commande generate : écrit le réseau et affiche son résumé."""

    try:
        net = build_family(config)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    if not config.out:
        sys.stdout.write(serialize_network(net))
        return None

    write_network(net, config.out)
    logger.info(f"Réseau {net.name} écrit dans {config.out}")
    summary = summarize_network(net)
    rows = [{'sink': t, 'min_cut': c} for t, c in summary.pop('min_cut').items()]
    return ReportTable(['sink', 'min_cut'], rows, {'command': 'generate', 'out': config.out, **summary}), None


def command_sweep(config: RunConfig, logger: logging.Logger) -> Output:
    """Commande sweep : q·borne pour chaque ordre de corps."""

    params = {name: value for name, value in config.params.items() if value is not None}
    if config.w is not None:
        params['w'] = config.w
    if config.network:
        if config.w is None:
            raise ConfigError("sweep --network : --rate est requis")
        net = load_network(config.network)
        w = config.w
        collections = select_paths(net, w)
        seq = build_cut_sequences(net, collections)
        params.setdefault('n', seq.total_r)
        params.setdefault('m', len(net.transit_nodes))
        params.setdefault('l', len(net.sinks))
        params.setdefault('r', max(seq.r.values()))
        capacities = check_rate(net, w)
        params.setdefault('delta', min(capacities.values()) - w)
    try:
        result = asymptotic_sweep(config.bound, config.fields, **params)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    logger.info(f"Balayage {config.bound} : limite {result.limit}")
    return result.to_table(), [f"limit,{result.limit}"]


COMMANDS = {
    'analyze': command_analyze,
    'simulate': command_simulate,
    'enumerate': command_enumerate,
    'generate': command_generate,
    'sweep': command_sweep,
}


def _fail(payload: dict, code: int) -> int:
    sys.stderr.write(json.dumps(payload, ensure_ascii=False, default=str) + '\n')
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Point d'entrée principal ; retourne le code de sortie."""

    parser = setup_argparse()
    args = parser.parse_args(argv)

    if args.verbose:
        log_level = logging.DEBUG
    elif args.quiet:
        log_level = logging.ERROR
    else:
        log_level = logging.INFO

    logger = CustomLogger.setup_logger('rlnc_bounds.main', log_level)
    CustomLogger.set_level(log_level)

    if not args.command:
        parser.print_help()
        return 0

    try:
        config = RunConfig.from_args(args)
        output = COMMANDS[config.command](config, logger)
        if output is not None:
            table, trailer = output
            converter = FormatConverter(table)
            if config.out and config.command != 'generate':
                if config.output_format == 'json':
                    converter.to_json(config.out)
                else:
                    converter.to_csv(config.out, trailer=trailer)
                logger.info(f"Rapport écrit dans {config.out}")
            else:
                sys.stdout.write(converter.render(config.output_format, trailer))
        return 0

    except RLNCError as e:
        logger.error(f"{type(e).__name__} : {e}")
        return _fail(e.to_dict(), e.exit_code)
    except FileNotFoundError as e:
        logger.error(f"Fichier introuvable : {e}")
        return _fail({'error': 'FileNotFoundError', 'message': str(e)}, 2)
    except Exception as e:
        logger.critical(f"Erreur inattendue : {e}", exc_info=True)
        if args.verbose:
            raise
        return _fail({'error': type(e).__name__, 'message': str(e)}, 99)


def run() -> None:
    """Point d'entrée console_scripts."""
    sys.exit(main())


if __name__ == '__main__':
    run()
