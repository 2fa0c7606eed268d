"""
Tests unitaires pour l'évaluation exacte des bornes et leur comportement asymptotique.
"""
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlnc_bounds.bounds.analysis import TIGHT, analyze_network, plait_chain_lengths
from rlnc_bounds.bounds.asymptotics import asymptotic_constants, asymptotic_sweep
from rlnc_bounds.bounds.formulas import (
    bound_network_cutwise,
    bound_network_internal_count,
    bound_network_split,
    bound_sink_cutwise,
    bound_sink_simple,
    compute_a,
    lower_bound_value,
    lower_bounds,
    spanning_probability,
    split_path_sum,
)
from rlnc_bounds.converters.format_converter import FormatConverter
from rlnc_bounds.cuts.sequences import build_cut_sequences
from rlnc_bounds.generators.families import gen_butterfly, gen_plait, gen_plait_union
from rlnc_bounds.generators.random_layered import gen_layered_random
from rlnc_bounds.gfield.field import get_field
from rlnc_bounds.gfield.matrix import MatrixGF
from rlnc_bounds.network.flow import select_paths
from rlnc_bounds.network.model import Channel, Network
from rlnc_bounds.sim.engine import count_free_coefficients
from rlnc_bounds.sim.exhaustive import enumerate_exact
from rlnc_bounds.utils.exceptions import CapacityError, UnsupportedFieldError


def _butterfly_sequences():
    net = gen_butterfly()
    return build_cut_sequences(net, select_paths(net, 2))


def _relay_network():
    """s ⇉ t1 (e1, e2), t1 → t2 (e3), s → t2 (e4) : t1 relaie vers t2."""
    return Network('relay', ('s', 't1', 't2'),
                   (Channel('e1', 's', 't1'), Channel('e2', 's', 't1'),
                    Channel('e3', 't1', 't2'), Channel('e4', 's', 't2')),
                   's', ('t1', 't2'))


class TestElementaryQuantities:
    """Tests pour a, la probabilité de base et les constantes limites."""

    def test_a_binary_rate_two(self):
        """Test a = 5/8 pour q = 2, w = 2."""
        assert compute_a(2, 2) == Fraction(5, 8)

    @pytest.mark.parametrize('q', [2, 3, 16, 65521])
    def test_a_rate_one(self, q):
        """Test a = 1/q pour w = 1."""
        assert compute_a(q, 1) == Fraction(1, q)

    def test_a_rate_zero(self):
        """Test a = 0 pour w = 0."""
        assert compute_a(7, 0) == 0

    def test_a_q16(self):
        """Test a = 271/4096 pour q = 16, w = 2."""
        assert compute_a(16, 2) == Fraction(271, 4096)

    def test_spanning_probability_values(self):
        """Test des valeurs de référence de la probabilité de compléter une base."""
        assert spanning_probability(2, 2, 2) == 1
        assert spanning_probability(2, 2, 0) == Fraction(3, 8)
        assert spanning_probability(2, 1, 0) == Fraction(1, 2)
        assert spanning_probability(3, 2, 0) == Fraction(16, 27)

    def test_spanning_probability_error(self):
        """Test de l'erreur pour k0 > n."""
        with pytest.raises(ValueError):
            spanning_probability(2, 1, 2)

    @pytest.mark.parametrize('q,expected', [(2, Fraction(6, 16)), (3, Fraction(48, 81))])
    def test_spanning_probability_enumeration(self, q, expected):
        """Test contre l'énumération de toutes les paires de vecteurs de GF(q)^2."""
        gf = get_field(q)
        vectors = list(itertools.product(range(q), repeat=2))
        spanning = sum(1 for u, v in itertools.product(vectors, repeat=2)
                       if MatrixGF.from_columns([u, v], 2, gf).rank() == 2)
        assert Fraction(spanning, len(vectors) ** 2) == expected == spanning_probability(q, 2, 0)

    def test_asymptotic_constants(self):
        """Test des constantes limites."""
        assert asymptotic_constants(3, 2, 0)['path_sum_limit'] == 5
        assert asymptotic_constants(0, 2, 4)['internal_count_limit'] == 10
        assert asymptotic_constants(0, 1, 0)['path_sum_limit'] == 1


class TestNetworkBounds:
    """Tests pour les bornes au niveau du réseau."""

    def test_cutwise_plait_union(self):
        """Test : union de tresses (2,1,2) sur GF(2), 485/512 valide."""
        net = gen_plait_union(2, 1, 2)
        entry = bound_network_cutwise(build_cut_sequences(net, select_paths(net, 2)), 2, 2)
        assert entry.value == Fraction(485, 512)
        assert entry.valid

    def test_cutwise_butterfly_small_field(self):
        """Test : papillon sur GF(2), valeur brute 16375/16384 marquée invalide."""
        entry = bound_network_cutwise(_butterfly_sequences(), 2, 2)
        assert entry.value == Fraction(16375, 16384)
        assert entry.valid is False
        assert entry.probability is None
        assert entry.to_row()['probability'] is None

    def test_cutwise_large_field_valid(self):
        """Test : pour q grand, la borne est valide et < 1."""
        entry = bound_network_cutwise(_butterfly_sequences(), 2 ** 16, 2)
        assert entry.valid
        assert entry.value < 1

    def test_split_decomposition(self):
        """Test S = l·b + u."""
        assert split_path_sum(8, 2) == (4, 0)
        assert split_path_sum(7, 2) == (3, 1)
        assert split_path_sum(0, 3) == (0, 0)

    def test_split_butterfly_equals_cutwise(self):
        """Test : sur le papillon, la borne par somme coïncide avec la borne coupe par coupe."""
        entry = bound_network_split(8, 2, 2, 2)
        assert entry.value == Fraction(16375, 16384)
        assert not entry.valid
        assert entry.inputs['b'] == 4 and entry.inputs['u'] == 0

    def test_split_zero(self):
        """Test S = 0 : 1 − (1−a)^l."""
        a = compute_a(5, 2)
        assert bound_network_split(0, 3, 5, 2).value == 1 - (1 - a) ** 3

    def test_internal_count_zero(self):
        """Test m = 0 : 1 − (1−a)^l."""
        a = compute_a(4, 1)
        assert bound_network_internal_count(0, 2, 4, 1).value == 1 - (1 - a) ** 2

    def test_internal_count_butterfly_q16(self):
        """Test papillon, |J| = 4, l = 2, q = 16."""
        a = Fraction(271, 4096)
        entry = bound_network_internal_count(4, 2, 16, 2)
        assert entry.value == 1 - (1 - a) ** 2 * (1 - 2 * a) ** 4
        assert entry.valid

    def test_internal_count_monotone(self):
        """Test : la borne croît avec m quand l·a < 1."""
        assert bound_network_internal_count(5, 2, 16, 2).value >= bound_network_internal_count(4, 2, 16, 2).value

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 40), st.integers(1, 5), st.sampled_from([16, 64, 256, 4096]), st.integers(1, 3))
    def test_split_monotone_in_sum(self, S, l, q, w):  # noqa: E741
        """Test : la borne par somme est croissante en S (facteurs valides)."""
        low, high = bound_network_split(S, l, q, w), bound_network_split(S + 1, l, q, w)
        if low.valid and high.valid:
            assert low.value <= high.value

    def test_split_equals_internal_count(self):
        """Test : S = l·m donne la borne par nombre de nœuds internes."""
        for q in (16, 256):
            assert bound_network_split(2 * 4, 2, q, 2).value == bound_network_internal_count(4, 2, q, 2).value


class TestSinkBounds:
    """Tests pour les bornes au niveau d'un puits."""

    def test_butterfly_profile(self):
        """Test profil [0,1,1,1,1] sur GF(2) : 125/128."""
        entry = bound_sink_cutwise([0, 1, 1, 1, 1], 2, 2, scope='t1')
        assert entry.value == Fraction(125, 128)
        assert entry.valid
        assert entry.scope == 't1'

    def test_direct_profile(self):
        """Test profil [0] : a."""
        assert bound_sink_cutwise([0], 3, 2).value == compute_a(3, 2)

    @pytest.mark.parametrize('r', [0, 1, 2, 5])
    def test_closed_form(self, r):
        """Test profil [0, 1, ..., 1] avec w = 2 sur GF(2) : 1 − (3/8)(1/2)^r."""
        entry = bound_sink_cutwise([0] + [1] * r, 2, 2)
        assert entry.value == 1 - Fraction(3, 8) * Fraction(1, 2) ** r

    def test_empty_profile(self):
        """Test de l'erreur sur un profil vide."""
        with pytest.raises(ValueError):
            bound_sink_cutwise([], 2, 2)

    def test_simple_values(self):
        """Test 1 − (1−a)^{base+1} : 5/8 puis 55/64."""
        assert bound_sink_simple(0, 2, 2).value == Fraction(5, 8)
        assert bound_sink_simple(1, 2, 2).value == Fraction(55, 64)

    def test_simple_independent_of_sink_count(self):
        """Test : la valeur du pire cas ne dépend pas de l."""
        values = {bound_sink_simple(4, 16, 2, bound_id='sink_worst_case', l=l).value for l in (1, 2, 5)}
        assert len(values) == 1

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 4), st.sampled_from([2, 3, 4, 16]), st.data())
    def test_cutwise_below_simple(self, w, q, data):
        """Test : borne coupe par coupe ≤ borne simple, égalité ssi profil nul."""
        profile = data.draw(st.lists(st.integers(0, w - 1), min_size=1, max_size=6))
        cutwise = bound_sink_cutwise(profile, q, w).value
        simple = bound_sink_simple(len(profile) - 1, q, w).value
        assert cutwise <= simple
        assert (cutwise == simple) == all(size == 0 for size in profile)


class TestLowerBounds:
    """Tests pour les bornes inférieures."""

    def test_butterfly_rate_two(self):
        """Test papillon, w = 2, q = 2 : 1/2."""
        bounds = lower_bounds(gen_butterfly(), 2, 2)
        assert bounds['sinks'] == {'t1': Fraction(1, 2), 't2': Fraction(1, 2)}
        assert bounds['network'] == Fraction(1, 2)

    def test_butterfly_rate_one(self):
        """Test papillon, w = 1, q = 2 : 1/4 (δ_t = 1)."""
        bounds = lower_bounds(gen_butterfly(), 1, 2)
        assert bounds['delta'] == {'t1': 1, 't2': 1}
        assert bounds['network'] == Fraction(1, 4)

    def test_zero_redundancy(self):
        """Test δ_t = 0 : 1/q."""
        assert lower_bound_value(13, 0) == Fraction(1, 13)

    def test_capacity_error(self):
        """Test de l'erreur quand w dépasse une coupe minimale."""
        with pytest.raises(CapacityError):
            lower_bounds(gen_butterfly(), 3, 2)


class TestAnalyze:
    """Tests pour la chaîne d'analyse complète."""

    def test_butterfly_q16(self):
        """Test papillon, w = 2, q = 16 : toutes les bornes et la borne inférieure 1/16."""
        report = analyze_network(gen_butterfly(), 2, 16)
        for bound_id in ('network_cutwise', 'network_split', 'network_internal_count',
                         'sink_worst_case', 'lower_network'):
            assert bound_id in report.ids()
        assert report.get('lower_network').value == Fraction(1, 16)
        assert report.get('sink_cutwise', 't1').value == 1 - (1 - compute_a(16, 2)) * Fraction(15, 16) ** 4
        assert report.summary['R'] == 4
        assert report.summary['sum_r'] == 8
        assert report.summary['internal_nodes'] == 4
        assert report.summary['profiles'] == {'t1': [0, 1, 1, 1, 1], 't2': [0, 1, 1, 1, 1]}
        assert all(entry.valid for entry in report.entries)

    def test_butterfly_q2_invalid_not_probability(self):
        """Test : une borne invalide n'est jamais présentée comme probabilité."""
        report = analyze_network(gen_butterfly(), 2, 2)
        table = report.to_table()
        row = next(r for r in table if r['bound_id'] == 'network_cutwise')
        assert row['valid'] is False
        assert row['probability'] is None
        assert (row['numerator'], row['denominator']) == (16375, 16384)
        assert '"probability": null' in FormatConverter(table).to_json_text()

    def test_capacity_error(self):
        """Test papillon, w = 3 : erreur de capacité."""
        with pytest.raises(CapacityError):
            analyze_network(gen_butterfly(), 3, 16)

    def test_unsupported_field(self):
        """Test d'un ordre de corps non supporté."""
        with pytest.raises(UnsupportedFieldError):
            analyze_network(gen_butterfly(), 2, 6)

    def test_plait_tight(self):
        """Test tresse (2,1), q = 2 : 55/64 marquée atteinte par construction."""
        report = analyze_network(gen_plait(2, 1), 2, 2)
        entry = report.get('sink_simple', 't')
        assert entry.value == Fraction(55, 64)
        assert TIGHT in entry.note

    def test_plait_union_tight(self):
        """Test : union de tresses, la borne réseau est marquée atteinte."""
        report = analyze_network(gen_plait_union(2, 1, 2), 2, 2)
        entry = report.get('network_cutwise')
        assert entry.value == Fraction(485, 512)
        assert TIGHT in entry.note

    def test_butterfly_not_plait(self):
        """Test : le papillon n'est pas une union de tresses."""
        assert plait_chain_lengths(gen_butterfly(), 2) is None
        assert plait_chain_lengths(gen_plait_union(2, 3, 2), 2) == {'t1': 3, 't2': 0}

    def test_min_internal_strategy(self):
        """Test de la stratégie min-internal : deux bornes par somme comparées."""
        report = analyze_network(gen_butterfly(), 2, 256, strategy='min-internal')
        baseline = report.get('network_split')
        minimal = report.get('network_split_min_internal')
        assert minimal.value <= baseline.value
        assert report.summary['certified'] is True
        assert report.summary['sum_r_first_found'] == 8

    def test_explain(self):
        """Test du listing des coupes dans le rapport."""
        report = analyze_network(gen_butterfly(), 2, 16, explain=True)
        assert report.explain[2] == 'CUT_{1,2}={e3,e2}, CUT_{1,2}^out={e3}'
        assert report.to_table().metadata['explain'] == report.explain

    @pytest.mark.parametrize('q', [16, 256])
    def test_float_agreement(self, q):
        """Test : l'évaluation flottante concorde sur 12 chiffres significatifs."""
        a = 1 - (1 - 1 / q) * (1 - 1 / q ** 2)
        report = analyze_network(gen_butterfly(), 2, q)
        expected = 1 - (1 - a) ** 2 * (1 - 2 * a) ** 4
        assert report.get('network_internal_count').float_value == pytest.approx(expected, rel=1e-12)


class TestBoundOrdering:
    """Tests d'ordre entre bornes sur des réseaux aléatoires (q = 2^8)."""

    @pytest.mark.parametrize('seed', range(200))
    def test_chain_of_bounds(self, seed):
        """Test : coupe par coupe ≤ somme Σr ≤ somme n ≤ nombre de nœuds internes."""
        w = 1 + seed % 2
        l = 1 + seed % 3  # noqa: E741
        self._check_chain(gen_layered_random(1 + seed % 4, 3, w, l, seed), w)

    def test_relay_sink(self):
        """Test de la même chaîne quand un puits relaie vers l'autre."""
        net = _relay_network()
        report = analyze_network(net, 2, 2 ** 8)
        assert report.summary['transit_nodes'] == 1
        assert report.summary['sum_r'] == 1
        self._check_chain(net, 2)

    @staticmethod
    def _check_chain(net, w):
        l = len(net.sinks)  # noqa: E741
        q = 2 ** 8
        report = analyze_network(net, w, q)
        transit = len(net.transit_nodes)
        sum_r = report.summary['sum_r']

        cutwise = report.get('network_cutwise')
        split = report.get('network_split')
        internal = report.get('network_internal_count')
        assert cutwise.valid and split.valid and internal.valid
        assert cutwise.value <= split.value
        for n in range(sum_r, l * transit + 1):
            assert split.value <= bound_network_split(n, l, q, w).value <= internal.value
        assert internal.value <= bound_network_internal_count(transit + 1, l, q, w).value

        for t in net.sinks:
            assert report.get('sink_cutwise', t).value <= report.get('sink_simple', t).value
            assert report.get('sink_simple', t).value <= report.get('sink_internal_count', t).value
            assert report.get('lower_sink', t).value <= report.get('sink_cutwise', t).value


ENUMERATION_LIMIT = 2 ** 16


def _assert_bounds_bracket_exact(net, w, q, strategy='first-found'):
    """Chaque borne inférieure ≤ probabilité exacte ≤ chaque borne supérieure valide."""
    report = analyze_network(net, w, q, strategy)
    exact = enumerate_exact(net, w, get_field(q))
    sinks = exact.sink_probabilities
    for entry in report.entries:
        if entry.bound_id == 'sink_worst_case':
            target = max(sinks.values())
        elif entry.scope == 'network':
            target = exact.network_probability
        else:
            target = sinks[entry.scope]
        if entry.bound_id.startswith('lower'):
            assert entry.value <= target, entry.bound_id
        elif entry.valid:
            assert target <= entry.value, (entry.bound_id, entry.scope)


class TestBoundsAgainstEnumeration:
    """Tests des bornes contre les probabilités exactes sur de petits corps."""

    @pytest.mark.parametrize('q', [2, 3, 4])
    @pytest.mark.parametrize('name,net,w', [
        ('plait-2-1', gen_plait(2, 1), 2),
        ('plait-1-3', gen_plait(1, 3), 1),
        ('plait-union-2-1-2', gen_plait_union(2, 1, 2), 2),
        ('plait-union-1-2-3', gen_plait_union(1, 2, 3), 1),
        ('relay', _relay_network(), 2),
    ])
    def test_families(self, name, net, w, q):
        """Test sur les familles de référence et un puits relais."""
        if q ** count_free_coefficients(net, w) > ENUMERATION_LIMIT:
            pytest.skip(f"{name} : espace trop grand sur GF({q})")
        for strategy in ('first-found', 'min-internal'):
            _assert_bounds_bracket_exact(net, w, q, strategy)

    def test_butterfly(self):
        """Test papillon sur GF(2)."""
        _assert_bounds_bracket_exact(gen_butterfly(), 2, 2)

    @pytest.mark.parametrize('q', [2, 3, 4])
    @pytest.mark.parametrize('seed', range(24))
    def test_random_networks(self, seed, q):
        """Test sur de petits réseaux aléatoires."""
        w = 1 + seed % 2
        l = 1 + (seed // 2) % 2  # noqa: E741
        net = gen_layered_random(1 + (seed // 4) % 2, 2, w, l, seed)
        if q ** count_free_coefficients(net, w) > ENUMERATION_LIMIT:
            pytest.skip(f"GF({q})^N trop grand pour {net.name}")
        _assert_bounds_bracket_exact(net, w, q)

    def test_random_networks_are_enumerable(self):
        """Test : la plupart des instances aléatoires ci-dessus sont bien énumérées sur GF(2)."""
        enumerable = 0
        for seed in range(24):
            w = 1 + seed % 2
            net = gen_layered_random(1 + (seed // 4) % 2, 2, w, 1 + (seed // 2) % 2, seed)
            if 2 ** count_free_coefficients(net, w) <= ENUMERATION_LIMIT:
                enumerable += 1
        assert enumerable >= 12


class TestAsymptotics:
    """Tests pour le balayage q·B(q)."""

    FIELDS = [2 ** 8, 2 ** 12, 2 ** 16]

    @pytest.mark.parametrize('bound,params', [
        ('network-split', {'n': 8, 'l': 2, 'w': 2}),
        ('network-internal-count', {'m': 4, 'l': 2, 'w': 2}),
    ])
    def test_convergence(self, bound, params):
        """Test : q·B(q) monotone, à moins de 1 % de la limite 10 en q = 2^16."""
        result = asymptotic_sweep(bound, self.FIELDS, **params)
        scaled = result.scaled_values()
        assert result.limit == 10
        assert scaled[0] < scaled[1] < scaled[2]
        assert abs(scaled[-1] - 10) / 10 < Fraction(1, 100)
        assert all(row.valid for row in result.rows)

    def test_sink_simple_limit(self):
        """Test : borne puits simple, limite r + 1."""
        result = asymptotic_sweep('sink-simple', self.FIELDS, r=3, w=2)
        assert result.limit == 4
        assert abs(result.scaled_values()[-1] - 4) / 4 < Fraction(1, 100)

    def test_lower_constant(self):
        """Test : borne inférieure avec δ = 0, q·(1/q) = 1 pour tout q."""
        result = asymptotic_sweep('lower', [2, 3, 256], delta=0)
        assert result.scaled_values() == [1, 1, 1]
        assert result.limit == 1
        assert asymptotic_sweep('lower', [2], delta=2).limit == 0

    def test_invalid_rows_marked(self):
        """Test : une borne invalide marque la ligne sans interrompre le balayage."""
        result = asymptotic_sweep('network-split', [2, 256], n=8, l=2, w=2)
        assert [row.valid for row in result.rows] == [False, True]

    def test_missing_parameter(self):
        """Test de l'erreur sur un paramètre manquant."""
        with pytest.raises(ValueError):
            asymptotic_sweep('network-split', self.FIELDS, n=8, w=2)

    def test_unsupported_order(self):
        """Test d'un ordre non supporté dans la liste."""
        with pytest.raises(UnsupportedFieldError):
            asymptotic_sweep('lower', [2, 10], delta=0)

    def test_table(self):
        """Test de la table produite et de la limite en métadonnées."""
        table = asymptotic_sweep('lower', [2, 4], delta=0).to_table()
        assert table.metadata['limit'] == 1
        assert table.column('q') == [2, 4]
