"""
Lecture et écriture des fichiers réseau (objet JSON UTF-8).

Format :
    {"name": str, "nodes": [str...], "source": str, "sinks": [str...],
     "channels": [{"id": str, "tail": str, "head": str}...]}

L'ordre des canaux dans le fichier définit l'ordre de parcours déterministe.
"""
import json
from pathlib import Path
from typing import Any, Dict

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.network.model import RESERVED_ID_PATTERN, Channel, Network
from rlnc_bounds.parsers.base_parser import BaseParser
from rlnc_bounds.utils.exceptions import NetworkFormatError
from rlnc_bounds.utils.file_validator import FileValidator
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


def _expect_str(value: Any, location: str) -> str:
    if not isinstance(value, str) or not value:
        raise NetworkFormatError("chaîne non vide attendue", location)
    return value


def _expect_list(value: Any, location: str) -> list:
    if not isinstance(value, list):
        raise NetworkFormatError("liste attendue", location)
    return value


def parse_network(text: str) -> Network:
    """
    Construit un Network à partir du texte d'un fichier réseau.

    Args:
        text (str): Document JSON

    Returns:
        Network: Réseau (non validé topologiquement, voir validate_network)

    Raises:
        NetworkFormatError: JSON invalide, champ manquant, identifiant dupliqué
            ou réservé, nœud inconnu ; l'erreur porte sa localisation
    """
    try:
        content = json.loads(text)
    except json.JSONDecodeError as e:
        raise NetworkFormatError(f"JSON invalide : {e.msg}", f"ligne {e.lineno}, colonne {e.colno}")

    if not isinstance(content, dict):
        raise NetworkFormatError("objet JSON attendu", "racine")

    for key in ('nodes', 'source', 'sinks', 'channels'):
        if key not in content:
            raise NetworkFormatError(f"champ '{key}' manquant", "racine")

    name = content.get('name', 'reseau')
    if not isinstance(name, str):
        raise NetworkFormatError("chaîne attendue", "name")

    nodes = []
    for i, node in enumerate(_expect_list(content['nodes'], 'nodes')):
        node = _expect_str(node, f"nodes[{i}]")
        if node in nodes:
            raise NetworkFormatError(f"nœud {node} dupliqué", f"nodes[{i}]")
        nodes.append(node)
    known = set(nodes)

    source = _expect_str(content['source'], 'source')
    if source not in known:
        raise NetworkFormatError(f"source {source} absente de nodes", 'source')

    sinks = []
    for i, sink in enumerate(_expect_list(content['sinks'], 'sinks')):
        sink = _expect_str(sink, f"sinks[{i}]")
        if sink not in known:
            raise NetworkFormatError(f"puits {sink} absent de nodes", f"sinks[{i}]")
        if sink in sinks:
            raise NetworkFormatError(f"puits {sink} dupliqué", f"sinks[{i}]")
        sinks.append(sink)
    if not sinks:
        raise NetworkFormatError("au moins un puits est requis", 'sinks')

    channels = []
    ids = set()
    for i, raw in enumerate(_expect_list(content['channels'], 'channels')):
        location = f"channels[{i}]"
        if not isinstance(raw, dict):
            raise NetworkFormatError("objet attendu", location)
        for key in ('id', 'tail', 'head'):
            if key not in raw:
                raise NetworkFormatError(f"champ '{key}' manquant", location)
        cid = _expect_str(raw['id'], f"{location}.id")
        if cid in ids:
            raise NetworkFormatError(f"identifiant de canal {cid} dupliqué", location)
        if RESERVED_ID_PATTERN.match(cid):
            raise NetworkFormatError(f"identifiant {cid} réservé aux canaux imaginaires", location)
        ids.add(cid)
        tail = _expect_str(raw['tail'], f"{location}.tail")
        head = _expect_str(raw['head'], f"{location}.head")
        for end, key in ((tail, 'tail'), (head, 'head')):
            if end not in known:
                raise NetworkFormatError(f"nœud inconnu {end}", f"{location}.{key}")
        channels.append(Channel(cid, tail, head))

    net = Network(name, tuple(nodes), tuple(channels), source, tuple(sinks))
    logger.info(f"Réseau {name} parsé : {len(nodes)} nœuds, {len(channels)} canaux")
    return net


def network_to_dict(net: Network) -> Dict[str, Any]:
    """Représentation JSON-sérialisable d'un réseau."""
    return {
        'name': net.name,
        'nodes': list(net.nodes),
        'source': net.source,
        'sinks': list(net.sinks),
        'channels': [{'id': c.id, 'tail': c.tail, 'head': c.head} for c in net.channels],
    }


def serialize_network(net: Network) -> str:
    """Texte du fichier réseau ; parse_network(serialize_network(net)) == net."""
    return json.dumps(network_to_dict(net), indent=2, ensure_ascii=False) + '\n'


class NetworkParser(BaseParser):
    """
    Parser des fichiers réseau JSON.

    Example:
        >>> parser = NetworkParser()
        >>> net = parser.parse('butterfly.json')
        >>> len(net.channels)
        9
    """

    def parse(self, file_path: str, **kwargs) -> Network:
        """
        Parse un fichier réseau.

        Args:
            file_path (str): Chemin du fichier
            encoding (str, optional): Encodage. Défaut: 'utf-8'

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            NetworkFormatError: Si le contenu est invalide
        """
        encoding = kwargs.get('encoding', Settings.DEFAULT_ENCODING)
        logger.info(f"Lecture du réseau : {file_path}")
        if FileValidator.is_readable(file_path) and not FileValidator.is_within_size_limit(file_path):
            logger.error(f"Fichier trop volumineux : {file_path}")
            raise NetworkFormatError(
                f"fichier de {FileValidator.get_size(file_path)} octets, maximum {Settings.MAX_FILE_SIZE}", file_path
            )
        try:
            text = self._read_file(file_path, encoding)
        except FileNotFoundError:
            logger.error(f"Fichier introuvable : {file_path}")
            raise
        except UnicodeDecodeError:
            logger.error(f"Erreur d'encodage : {file_path}")
            raise NetworkFormatError("erreur d'encodage", file_path)
        try:
            return parse_network(text)
        except NetworkFormatError as e:
            logger.error(f"Fichier réseau invalide {file_path} : {e}")
            raise

    def validate(self, file_path: str) -> bool:
        """True si le fichier existe, a l'extension .json et se parse."""
        if not FileValidator.is_readable(file_path):
            return False
        if not FileValidator.has_network_extension(file_path):
            return False
        try:
            parse_network(self._read_file(file_path))
            return True
        except Exception:
            return False


def read_network(file_path: str) -> Network:
    """Raccourci : NetworkParser().parse(file_path)."""
    return NetworkParser().parse(file_path)


def write_network(net: Network, file_path: str) -> None:
    """Écrit un réseau au format fichier réseau."""
    Path(file_path).write_text(serialize_network(net), encoding=Settings.DEFAULT_ENCODING)
    logger.info(f"Réseau {net.name} écrit dans {file_path}")
