"""
Module contenant les modèles de données.
"""
from .data_model import ReportTable

__all__ = ['ReportTable']
