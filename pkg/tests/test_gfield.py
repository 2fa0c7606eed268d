"""
Tests unitaires pour l'arithmétique des corps finis et le calcul de rang.
"""
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlnc_bounds.bounds.formulas import compute_a
from rlnc_bounds.gfield.field import (
    FieldElement,
    GaloisField,
    factor_order,
    get_field,
    is_supported_order,
    uniform_sample,
)
from rlnc_bounds.gfield.matrix import MatrixGF, batch_rank, matrix_rank
from rlnc_bounds.utils.exceptions import FieldArithmeticError, UnsupportedFieldError

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 11, 13, 16]


class TestFieldOrders:
    """Tests pour la reconnaissance des ordres supportés."""

    def test_prime_orders(self):
        """Test des corps premiers."""
        assert factor_order(2) == (2, 1)
        assert factor_order(65521) == (65521, 1)

    def test_binary_extensions(self):
        """Test des extensions binaires jusqu'à 2^16."""
        assert factor_order(4) == (2, 2)
        assert factor_order(256) == (2, 8)
        assert factor_order(2 ** 16) == (2, 16)

    @pytest.mark.parametrize('order', [0, 1, 6, 9, 27, 100, 2 ** 17])
    def test_unsupported_orders(self, order):
        """Test du rejet des ordres non supportés."""
        with pytest.raises(UnsupportedFieldError):
            factor_order(order)
        assert is_supported_order(order) is False

    def test_get_field_is_cached(self):
        """Test que get_field retourne la même instance."""
        assert get_field(16) is get_field(16)
        assert get_field(16) == GaloisField(16)


class TestFieldArithmetic:
    """Tests pour les opérations scalaires."""

    def test_characteristic_two(self):
        """Test GF(2) : 1 + 1 = 0."""
        gf = get_field(2)
        assert gf.one + gf.one == gf.zero

    def test_inverse_in_gf3(self):
        """Test GF(3) : l'inverse de 2 est 2."""
        gf = get_field(3)
        assert gf.element(2).inverse() == gf.element(2)

    def test_inverse_of_zero_raises(self):
        """Test de l'erreur explicite pour l'inverse de zéro."""
        for order in (2, 3, 16):
            gf = get_field(order)
            with pytest.raises(FieldArithmeticError):
                gf.zero.inverse()

    def test_mixed_fields_raise(self):
        """Test du refus des opérations entre corps différents."""
        with pytest.raises(FieldArithmeticError):
            get_field(2).one + get_field(3).one

    def test_element_out_of_range(self):
        """Test du rejet des représentants non canoniques."""
        with pytest.raises(FieldArithmeticError):
            get_field(4).element(4)

    @pytest.mark.parametrize('order', SMALL_ORDERS)
    def test_field_axioms_exhaustive(self, order):
        """Test exhaustif : identité, commutativité, inverse, distributivité."""
        gf = get_field(order)
        elements = list(gf.elements())
        for x in elements:
            assert x * gf.one == x
            assert x + gf.zero == x
            assert x + (-x) == gf.zero
            if x:
                assert x * x.inverse() == gf.one
            for y in elements:
                assert x + y == y + x
                assert x * y == y * x
                assert (x - y) + y == x
                if y:
                    assert (x / y) * y == x
        for x, y, z in itertools.product(elements[:5], repeat=3):
            assert x * (y + z) == x * y + x * z

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 2 ** 16 - 1), st.integers(1, 2 ** 16 - 1))
    def test_large_field_inverse(self, x, y):
        """Test randomisé des inverses dans GF(2^16)."""
        gf = get_field(2 ** 16)
        a, b = gf.element(x), gf.element(y)
        assert a * a.inverse() == gf.one
        assert (a * b) / b == a

    @pytest.mark.parametrize('order', [2, 5, 16, 256])
    def test_vectorized_matches_scalar(self, order):
        """Test de la concordance des opérations vectorisées et scalaires."""
        gf = get_field(order)
        x = np.arange(order, dtype=np.int64)
        y = np.roll(x, 3)
        assert gf.add_array(x, y).tolist() == [gf.add(a, b) for a, b in zip(x.tolist(), y.tolist())]
        assert gf.mul_array(x, y).tolist() == [gf.mul(a, b) for a, b in zip(x.tolist(), y.tolist())]
        nonzero = x[1:]
        assert gf.inv_array(nonzero).tolist() == [gf.inv(a) for a in nonzero.tolist()]


class TestUniformSample:
    """Tests pour le tirage uniforme."""

    def test_binary_frequency(self):
        """Test de la fréquence de 0 sur GF(2) (10^5 tirages)."""
        gf = get_field(2)
        rng = np.random.default_rng(11)
        draws = 10 ** 5
        zeros = sum(1 for _ in range(draws) if not uniform_sample(gf, rng))
        assert abs(zeros / draws - 0.5) <= 4 * math.sqrt(0.25 / draws)

    def test_all_values_observed(self):
        """Test que les 16 valeurs de GF(16) apparaissent."""
        gf = get_field(16)
        rng = np.random.default_rng(3)
        seen = {uniform_sample(gf, rng).value for _ in range(2000)}
        assert seen == set(range(16))

    def test_determinism(self):
        """Test : même graine, même tirage."""
        gf = get_field(256)
        first = [uniform_sample(gf, np.random.default_rng(42)) for _ in range(3)]
        assert len(set(first)) == 1
        assert isinstance(first[0], FieldElement)


def _det(rows, gf):
    """Déterminant par développement de Laplace (petites matrices)."""
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = gf.mul(value, _det(minor, gf))
        total = gf.add(total, term) if j % 2 == 0 else gf.sub(total, term)
    return total


def _largest_nonvanishing_minor(matrix: MatrixGF) -> int:
    rows = matrix.to_rows()
    for size in range(min(matrix.rows, matrix.cols), 0, -1):
        for rs in itertools.combinations(range(matrix.rows), size):
            for cs in itertools.combinations(range(matrix.cols), size):
                if _det([[rows[i][j] for j in cs] for i in rs], matrix.field) != 0:
                    return size
    return 0


@st.composite
def small_matrices(draw):
    order = draw(st.sampled_from([2, 3, 4]))
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, 3))
    entries = draw(st.lists(st.integers(0, order - 1), min_size=rows * cols, max_size=rows * cols))
    return MatrixGF(rows, cols, tuple(entries), get_field(order))


class TestMatrixRank:
    """Tests pour le rang par élimination exacte."""

    def test_identity(self):
        """Test de l'identité 2×2 sur GF(2)."""
        assert MatrixGF.from_rows([[1, 0], [0, 1]], get_field(2)).rank() == 2

    def test_equal_rows(self):
        """Test de deux lignes égales sur GF(2)."""
        assert MatrixGF.from_rows([[1, 1], [1, 1]], get_field(2)).rank() == 1

    def test_proportional_rows_gf3(self):
        """Test [[1,2],[2,1]] sur GF(3) : ligne 2 = 2·ligne 1."""
        assert MatrixGF.from_rows([[1, 2], [2, 1]], get_field(3)).rank() == 1

    def test_empty_and_zero(self):
        """Test des matrices nulles et sans colonne."""
        gf = get_field(5)
        assert MatrixGF(2, 0, (), gf).rank() == 0
        assert MatrixGF.from_rows([[0, 0, 0]], gf).rank() == 0

    def test_input_not_modified(self):
        """Test que le calcul du rang ne modifie pas la matrice."""
        m = MatrixGF.from_rows([[2, 1], [1, 3]], get_field(4))
        before = m.entries
        matrix_rank(m)
        assert m.entries == before

    def test_wrong_entry_count(self):
        """Test du contrôle rows·cols."""
        with pytest.raises(ValueError):
            MatrixGF(2, 2, (1, 0, 1), get_field(2))

    @settings(max_examples=300, deadline=None)
    @given(small_matrices())
    def test_rank_equals_largest_minor(self, matrix):
        """Test du rang contre le plus grand mineur non nul."""
        assert matrix.rank() == _largest_nonvanishing_minor(matrix)

    @settings(max_examples=200, deadline=None)
    @given(small_matrices(), st.data())
    def test_invariance_under_row_operations(self, matrix, data):
        """Test de l'invariance par échange et mise à l'échelle de lignes."""
        gf = matrix.field
        rows = matrix.to_rows()
        i = data.draw(st.integers(0, matrix.rows - 1))
        j = data.draw(st.integers(0, matrix.rows - 1))
        scale = data.draw(st.integers(1, gf.order - 1))
        rows[i], rows[j] = rows[j], rows[i]
        rows[i] = [gf.mul(scale, v) for v in rows[i]]
        assert MatrixGF.from_rows(rows, gf).rank() == matrix.rank()

    @settings(max_examples=100, deadline=None)
    @given(small_matrices())
    def test_batch_rank_matches_scalar(self, matrix):
        """Test de la concordance du rang par lots et du rang scalaire."""
        columns = [np.array([matrix.column(j)], dtype=np.int64) for j in range(matrix.cols)]
        assert batch_rank(matrix.field, columns, matrix.rows).tolist() == [matrix.rank()]

    @pytest.mark.parametrize('order,w', [(2, 2), (3, 2), (2, 3), (16, 2)])
    def test_singular_fraction_matches_a(self, order, w):
        """Test de la proportion de matrices singulières (10^5 tirages)."""
        gf = get_field(order)
        rng = np.random.default_rng(2024)
        samples = 10 ** 5
        columns = [gf.random_values(rng, (samples, w)) for _ in range(w)]
        singular = float(np.mean(batch_rank(gf, columns, w) < w))
        a = float(compute_a(order, w))
        assert abs(singular - a) <= 4 * math.sqrt(a * (1 - a) / samples)
