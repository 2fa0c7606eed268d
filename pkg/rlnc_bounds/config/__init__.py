"""
Module de configuration.

RunConfig s'importe depuis rlnc_bounds.config.run_config (il dépend de gfield).
"""
from .settings import Settings

__all__ = ['Settings']
