"""
Arithmétique des corps finis GF(q).

Deux familles sont supportées :
    - les corps premiers GF(p), p premier ≤ 2^16 ;
    - les extensions binaires GF(2^d), d ≤ 16, construites par tables
      log/antilog sur les polynômes de Conway listés dans CONWAY_POLYNOMIALS.

Un élément est représenté par un entier canonique dans [0, q). Pour GF(2^d),
le bit i de cet entier est le coefficient de x^i du polynôme représentant.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

import numpy as np

from rlnc_bounds.config.settings import Settings
from rlnc_bounds.utils.exceptions import FieldArithmeticError, UnsupportedFieldError
from rlnc_bounds.utils.logger import CustomLogger

logger = CustomLogger.setup_logger(__name__)


# Polynômes de Conway sur GF(2), degré → entier (bit i = coefficient de x^i).
CONWAY_POLYNOMIALS = {
    1: 0x3,       # x + 1
    2: 0x7,       # x^2 + x + 1
    3: 0xB,       # x^3 + x + 1
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x5B,      # x^6 + x^4 + x^3 + x + 1
    7: 0x83,      # x^7 + x + 1
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x46F,    # x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x10EB,   # x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    13: 0x201B,   # x^13 + x^4 + x^3 + x + 1
    14: 0x40A9,   # x^14 + x^7 + x^5 + x^3 + 1
    15: 0x8003,   # x^15 + x + 1
    16: 0x1002D,  # x^16 + x^5 + x^3 + x^2 + 1
}


def is_prime(n: int) -> bool:
    """Test de primalité par divisions successives (n ≤ 2^16 en pratique)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


def factor_order(order: int) -> Tuple[int, int]:
    """
    Décompose un ordre de corps supporté en (caractéristique, degré).

    Args:
        order (int): Ordre q du corps

    Returns:
        Tuple[int, int]: (p, d) avec q = p^d

    Raises:
        UnsupportedFieldError: Si q n'est ni un premier ≤ 2^16 ni 2^d avec d ≤ 16
    """
    if not isinstance(order, int) or isinstance(order, bool):
        raise UnsupportedFieldError(f"Ordre de corps invalide : {order!r}")
    if order > Settings.MAX_FIELD_ORDER:
        raise UnsupportedFieldError(
            f"Ordre {order} supérieur au maximum supporté ({Settings.MAX_FIELD_ORDER})"
        )
    if is_prime(order):
        return order, 1
    if order > 2 and order & (order - 1) == 0:
        return 2, order.bit_length() - 1
    raise UnsupportedFieldError(
        f"Ordre {order} non supporté : premier ≤ 2^16 ou puissance de 2 ≤ 2^16 attendu"
    )


def is_supported_order(order: int) -> bool:
    """Indique si GF(order) peut être construit."""
    try:
        factor_order(order)
    except UnsupportedFieldError:
        return False
    return True


class GaloisField:
    """
    Corps fini GF(q) avec opérations scalaires et vectorisées (numpy).

    Les opérations scalaires travaillent sur des entiers canoniques ; les
    opérations *_array travaillent sur des tableaux int64 et servent aux
    propagations par lots du simulateur.

    Attributes:
        characteristic (int): p
        degree (int): d
        order (int): q = p^d
        polynomial (int): polynôme de définition pour d > 1, sinon 0

    Example:
        >>> gf = GaloisField(4)
        >>> gf.mul(2, 3)
        1
    """

    def __init__(self, order: int):
        self.characteristic, self.degree = factor_order(order)
        self.order = order
        self.polynomial = CONWAY_POLYNOMIALS[self.degree] if self.degree > 1 else 0
        self._exp = None
        self._log = None
        self._exp_table = None
        self._log_table = None
        self._inv_table = None
        if self.degree > 1:
            self._build_tables()
        logger.debug(f"Corps GF({order}) construit (p={self.characteristic}, d={self.degree})")

    def _build_tables(self) -> None:
        q = self.order
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            if i > 0 and x == 1:
                raise UnsupportedFieldError(
                    f"Le polynôme {self.polynomial:#x} n'est pas primitif pour GF({q})"
                )
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & q:
                x ^= self.polynomial
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log
        self._exp_table = np.array(exp, dtype=np.int64)
        self._log_table = np.array(log, dtype=np.int64)

    @property
    def is_prime_field(self) -> bool:
        return self.degree == 1

    # --- scalaires -----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.is_prime_field:
            return (x + y) % self.order
        return x ^ y

    def sub(self, x: int, y: int) -> int:
        if self.is_prime_field:
            return (x - y) % self.order
        return x ^ y

    def neg(self, x: int) -> int:
        if self.is_prime_field:
            return (-x) % self.order
        return x

    def mul(self, x: int, y: int) -> int:
        if self.is_prime_field:
            return (x * y) % self.order
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        """
        Inverse multiplicatif.

        Raises:
            FieldArithmeticError: Si x == 0
        """
        if x % self.order == 0:
            raise FieldArithmeticError(f"Inverse de zéro dans GF({self.order})")
        if self.is_prime_field:
            return pow(x, -1, self.order)
        return self._exp[(self.order - 1) - self._log[x]]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    # --- éléments --------------------------------------------------------

    def element(self, value: int) -> 'FieldElement':
        """
        Construit un élément du corps.

        Raises:
            FieldArithmeticError: Si value n'est pas dans [0, q)
        """
        if not 0 <= value < self.order:
            raise FieldArithmeticError(f"{value} n'est pas un élément canonique de GF({self.order})")
        return FieldElement(int(value), self)

    @property
    def zero(self) -> 'FieldElement':
        return FieldElement(0, self)

    @property
    def one(self) -> 'FieldElement':
        return FieldElement(1, self)

    def elements(self) -> Iterator['FieldElement']:
        """Itère sur les q éléments dans l'ordre des entiers canoniques."""
        for value in range(self.order):
            yield FieldElement(value, self)

    def random_element(self, rng: np.random.Generator) -> 'FieldElement':
        """Tire un élément uniformément avec le générateur fourni."""
        return FieldElement(int(rng.integers(0, self.order)), self)

    def random_values(self, rng: np.random.Generator, size) -> np.ndarray:
        """Tire un tableau d'entiers canoniques uniformes."""
        return rng.integers(0, self.order, size=size, dtype=np.int64)

    # --- vectorisé -------------------------------------------------------

    def add_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.is_prime_field:
            return (x + y) % self.order
        return np.bitwise_xor(x, y)

    def sub_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.is_prime_field:
            return (x - y) % self.order
        return np.bitwise_xor(x, y)

    def mul_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.is_prime_field:
            return (x * y) % self.order
        x, y = np.broadcast_arrays(x, y)
        out = np.zeros(x.shape, dtype=np.int64)
        mask = (x != 0) & (y != 0)
        out[mask] = self._exp_table[self._log_table[x[mask]] + self._log_table[y[mask]]]
        return out

    def inv_array(self, x: np.ndarray) -> np.ndarray:
        """Inverse élément par élément ; x ne doit contenir aucun zéro."""
        if np.any(x == 0):
            raise FieldArithmeticError(f"Inverse de zéro dans GF({self.order})")
        if self.is_prime_field:
            return self._prime_inverse_table()[x]
        return self._exp_table[(self.order - 1) - self._log_table[x]]

    def _prime_inverse_table(self) -> np.ndarray:
        if self._inv_table is None:
            table = np.zeros(self.order, dtype=np.int64)
            for value in range(1, self.order):
                table[value] = pow(value, -1, self.order)
            self._inv_table = table
        return self._inv_table

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisField) and other.order == self.order

    def __hash__(self) -> int:
        return hash(('GaloisField', self.order))

    def __repr__(self) -> str:
        return f"GaloisField({self.order})"

    def __reduce__(self):
        return (get_field, (self.order,))


@lru_cache(maxsize=None)
def get_field(order: int) -> GaloisField:
    """Retourne le corps GF(order), construit une seule fois par processus."""
    return GaloisField(order)


@dataclass(frozen=True)
class FieldElement:
    """
    Élément d'un corps fini, immuable.

    Attributes:
        value (int): Représentant canonique dans [0, q)
        field (GaloisField): Corps d'appartenance
    """
    value: int
    field: GaloisField

    def _check(self, other: 'FieldElement') -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldArithmeticError("Opération entre éléments de corps différents")

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement(self.field.div(self.value, other.value), self.field)

    def __neg__(self) -> 'FieldElement':
        return FieldElement(self.field.neg(self.value), self.field)

    def inverse(self) -> 'FieldElement':
        return FieldElement(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"GF({self.field.order})[{self.value}]"


def uniform_sample(field: GaloisField, rng: np.random.Generator) -> FieldElement:
    """
    Tire un élément uniforme de field.

    Le tirage est déterministe pour un état de générateur donné.
    """
    return field.random_element(rng)
