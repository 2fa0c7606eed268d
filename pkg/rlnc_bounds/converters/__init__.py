"""
Module contenant les convertisseurs de rapports.
"""
from .format_converter import FormatConverter

__all__ = ['FormatConverter']
