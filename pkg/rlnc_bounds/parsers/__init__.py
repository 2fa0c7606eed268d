"""
Module contenant les parsers de fichiers réseau.
"""
from .base_parser import BaseParser
from .network_parser import (
    NetworkParser,
    network_to_dict,
    parse_network,
    read_network,
    serialize_network,
    write_network,
)

__all__ = [
    'BaseParser',
    'NetworkParser',
    'network_to_dict',
    'parse_network',
    'read_network',
    'serialize_network',
    'write_network',
]
