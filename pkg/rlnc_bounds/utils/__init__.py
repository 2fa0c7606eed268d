"""
Module contenant les utilitaires.
"""
from .exceptions import (
    RLNCError,
    FieldArithmeticError,
    UnsupportedFieldError,
    NetworkFormatError,
    NetworkValidationError,
    CycleError,
    CapacityError,
    PathError,
    CutSequenceError,
    CoefficientError,
    EnumerationCapError,
    GenerationError,
    ConfigError,
)
from .logger import CustomLogger
from .file_validator import FileValidator

__all__ = [
    'RLNCError',
    'FieldArithmeticError',
    'UnsupportedFieldError',
    'NetworkFormatError',
    'NetworkValidationError',
    'CycleError',
    'CapacityError',
    'PathError',
    'CutSequenceError',
    'CoefficientError',
    'EnumerationCapError',
    'GenerationError',
    'ConfigError',
    'CustomLogger',
    'FileValidator',
]
