"""
Tests unitaires pour la propagation des noyaux, le Monte Carlo et l'énumération exacte.
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from rlnc_bounds.bounds.formulas import (
    bound_network_cutwise,
    bound_sink_cutwise,
    bound_sink_simple,
    compute_a,
    spanning_probability,
)
from rlnc_bounds.cuts.sequences import build_cut_sequences
from rlnc_bounds.generators.families import gen_butterfly, gen_plait, gen_plait_union
from rlnc_bounds.gfield.field import get_field
from rlnc_bounds.network.flow import select_paths
from rlnc_bounds.network.model import Channel, Network
from rlnc_bounds.sim.engine import (
    CodingEngine,
    count_free_coefficients,
    decoding_matrix,
    propagate_kernels,
    run_trial,
    trial_rng,
)
from rlnc_bounds.sim.exhaustive import assignment_digits, enumerate_exact
from rlnc_bounds.sim.montecarlo import monte_carlo
from rlnc_bounds.sim.results import TrialOutcome, confidence_interval
from rlnc_bounds.utils.exceptions import CoefficientError, ConfigError, EnumerationCapError

TRIALS = 10 ** 5
SEED = 20240607


def _coefficients(net, w, gf, value_of):
    engine = CodingEngine(net, w, gf)
    return {pair: gf.element(value_of(pair)) for pair in engine.pairs}


class TestCoefficients:
    """Tests pour le dénombrement et l'ordre des coefficients locaux."""

    def test_counts(self):
        """Test : papillon 12, tresse (2,1) 8, réseau direct w·w."""
        assert count_free_coefficients(gen_butterfly(), 2) == 12
        assert count_free_coefficients(gen_plait(2, 1), 2) == 8
        assert count_free_coefficients(gen_plait(3, 0), 3) == 9

    def test_engine_agrees_with_count(self):
        """Test : le moteur a autant de paires que de coefficients."""
        net = gen_plait_union(2, 1, 2)
        assert CodingEngine(net, 2, get_field(2)).free_coefficients == count_free_coefficients(net, 2) == 12

    def test_odometer_order(self):
        """Test de l'ordre des paires : nœud, canal entrant, canal sortant."""
        engine = CodingEngine(gen_butterfly(), 2, get_field(2))
        assert engine.pairs[:6] == [('d1', 'e1'), ('d1', 'e2'), ('d2', 'e1'), ('d2', 'e2'),
                                    ('e1', 'e3'), ('e1', 'e4')]
        assert engine.pairs[-2:] == [('e7', 'e8'), ('e7', 'e9')]

    def test_assignment_digits(self):
        """Test : la dernière paire varie le plus vite."""
        assert assignment_digits(0, 4, 2, 2).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
        assert assignment_digits(5, 6, 3, 3).tolist() == [[0, 1, 2]]


class TestPropagation:
    """Tests pour propagate_kernels et decoding_matrix."""

    def test_identity_plait(self):
        """Test tresse (2,1) avec coefficients identité : vecteurs de base, rangs 2."""
        net = gen_plait(2, 1)
        gf = get_field(2)
        identity = {('d1', 'e1'), ('d2', 'e2'), ('e1', 'e3'), ('e2', 'e4')}
        kernels = propagate_kernels(net, 2, _coefficients(net, 2, gf, lambda p: int(p in identity)))
        assert kernels.values('e3') == (1, 0)
        assert kernels.values('e4') == (0, 1)
        assert kernels['d1'] == (gf.one, gf.zero)
        assert decoding_matrix(kernels, net, 't').to_rows() == [[1, 0], [0, 1]]
        assert decoding_matrix(kernels, net, 't').rank() == 2

    def test_all_zero(self):
        """Test : coefficients nuls, noyaux nuls, rang 0 partout."""
        net = gen_butterfly()
        gf = get_field(3)
        kernels = propagate_kernels(net, 2, _coefficients(net, 2, gf, lambda p: 0))
        assert all(kernels.values(c.id) == (0, 0) for c in net.channels)
        assert all(decoding_matrix(kernels, net, t).rank() == 0 for t in net.sinks)

    def test_butterfly_all_ones(self):
        """Test papillon sur GF(2), tous les coefficients à 1 : les deux puits échouent."""
        net = gen_butterfly()
        gf = get_field(2)
        kernels = propagate_kernels(net, 2, _coefficients(net, 2, gf, lambda p: 1))
        assert kernels.values('e1') == kernels.values('e2') == (1, 1)
        assert kernels.values('e7') == (0, 0)
        ranks = {t: decoding_matrix(kernels, net, t).rank() for t in net.sinks}
        assert ranks == {'t1': 1, 't2': 1}

    def test_decoding_matrix_columns(self):
        """Test : F_t1 du papillon a pour colonnes f_e3 et f_e8."""
        net = gen_butterfly()
        gf = get_field(16)
        kernels = propagate_kernels(net, 2, _coefficients(net, 2, gf, lambda p: 1 + len(p[1]) % 3))
        matrix = decoding_matrix(kernels, net, 't1')
        assert (matrix.rows, matrix.cols) == (2, 2)
        assert matrix.column(0) == kernels.values('e3')
        assert matrix.column(1) == kernels.values('e8')

    def test_missing_coefficient(self):
        """Test de l'erreur nommant la paire sans coefficient."""
        net = gen_plait(2, 1)
        gf = get_field(2)
        coefficients = _coefficients(net, 2, gf, lambda p: 1)
        del coefficients[('e2', 'e3')]
        with pytest.raises(CoefficientError) as exc_info:
            propagate_kernels(net, 2, coefficients)
        assert exc_info.value.pair == ('e2', 'e3')

    @pytest.mark.parametrize('order', [2, 3, 16, 257])
    def test_scalar_matches_batch(self, order):
        """Test : propagation scalaire et par lots identiques."""
        net = gen_butterfly()
        gf = get_field(order)
        engine = CodingEngine(net, 2, gf)
        rng = np.random.default_rng(order)
        batch = gf.random_values(rng, (16, engine.free_coefficients))
        kernels = engine.propagate_batch(batch)
        for b in range(batch.shape[0]):
            scalar = engine.propagate(batch[b])
            for cid, column in engine.columns.items():
                assert scalar.values(cid) == tuple(kernels[b, column].tolist())


class TestTrials:
    """Tests pour run_trial."""

    def test_deterministic(self):
        """Test : même générateur, même issue."""
        net = gen_butterfly()
        gf = get_field(4)
        first = run_trial(net, 2, gf, trial_rng(7, 3))
        assert run_trial(net, 2, gf, trial_rng(7, 3)) == first

    def test_single_in_channel_always_fails(self):
        """Test : un puits à un seul canal entrant échoue toujours pour w = 2."""
        net = Network('etroit', ('s', 'a', 't'),
                      (Channel('e1', 's', 'a'), Channel('e2', 's', 'a'), Channel('e3', 'a', 't')),
                      's', ('t',))
        gf = get_field(5)
        engine = CodingEngine(net, 2, gf)
        for i in range(50):
            outcome = run_trial(net, 2, gf, trial_rng(1, i), engine)
            assert outcome.ranks['t'] <= 1
            assert outcome.network_failure

    def test_plait_singular_rate(self):
        """Test : tresse (2,0), la fréquence d'échec tend vers a = 5/8."""
        net = gen_plait(2, 0)
        gf = get_field(2)
        engine = CodingEngine(net, 2, gf)
        trials = 20000
        failures = sum(run_trial(net, 2, gf, trial_rng(SEED, i), engine).network_failure
                       for i in range(trials))
        a = float(compute_a(2, 2))
        assert abs(failures / trials - a) <= 4 * math.sqrt(a * (1 - a) / trials)

    def test_outcome_flags(self):
        """Test : le réseau échoue dès qu'un puits échoue."""
        outcome = TrialOutcome({'t1': 2, 't2': 1}, 2)
        assert outcome.sink_failures == {'t1': False, 't2': True}
        assert outcome.network_failure


class TestExactEnumeration:
    """Tests pour enumerate_exact."""

    def test_butterfly(self):
        """Test papillon sur GF(2) : 4096 affectations, P_et1 = 125/128."""
        result = enumerate_exact(gen_butterfly(), 2, get_field(2))
        assert result.total == 4096
        assert result.sink_probabilities['t1'] == Fraction(125, 128)
        assert result.sink_probabilities['t1'] == bound_sink_cutwise([0, 1, 1, 1, 1], 2, 2).value
        assert result.is_consistent()

    def test_plait_union(self):
        """Test union de tresses (2,1,2) sur GF(2) : P_e = 485/512."""
        net = gen_plait_union(2, 1, 2)
        result = enumerate_exact(net, 2, get_field(2))
        assert result.total == 4096
        assert result.network_probability == Fraction(485, 512)
        seq = build_cut_sequences(net, select_paths(net, 2))
        assert bound_network_cutwise(seq, 2, 2).value == result.network_probability

    @pytest.mark.parametrize('w', [1, 2])
    @pytest.mark.parametrize('r', [0, 1, 2])
    @pytest.mark.parametrize('q', [2, 3])
    def test_plait_equality(self, w, r, q):
        """Test : la probabilité d'échec d'une tresse vaut 1 − (1−a)^{r+1}."""
        result = enumerate_exact(gen_plait(w, r), w, get_field(q))
        expected = 1 - (1 - compute_a(q, w)) ** (r + 1)
        assert result.sink_probabilities['t'] == expected == bound_sink_simple(r, q, w).value

    def test_plait_two_one_count(self):
        """Test tresse (2,1) sur GF(2) : 55/64 sur 256 affectations."""
        result = enumerate_exact(gen_plait(2, 1), 2, get_field(2))
        assert result.total == 256
        assert result.network_probability == Fraction(55, 64)

    @pytest.mark.parametrize('w,R,l', [(1, 1, 2), (1, 2, 3), (2, 2, 2)])
    def test_plait_union_equality(self, w, R, l):  # noqa: E741
        """Test : union de tresses, P_e égale à la borne coupe par coupe."""
        net = gen_plait_union(w, R, l)
        q = 2
        result = enumerate_exact(net, w, get_field(q))
        seq = build_cut_sequences(net, select_paths(net, w))
        assert result.network_probability == bound_network_cutwise(seq, q, w).value
        assert result.network_probability == 1 - (1 - compute_a(q, w)) ** (R + l)

    @pytest.mark.parametrize('w', [1, 2])
    @pytest.mark.parametrize('q', [2, 3])
    def test_spanning_consistency(self, w, q):
        """Test : w vecteurs uniformes forment une base avec la probabilité attendue."""
        result = enumerate_exact(gen_plait(w, 0), w, get_field(q))
        assert 1 - result.network_probability == spanning_probability(q, w, 0)

    def test_cap_exceeded(self):
        """Test papillon sur GF(5) : 5^12 > 10^8."""
        with pytest.raises(EnumerationCapError) as exc_info:
            enumerate_exact(gen_butterfly(), 2, get_field(5))
        assert exc_info.value.required == 5 ** 12
        assert exc_info.value.to_dict()['cap'] == 10 ** 8

    def test_workers_partition(self):
        """Test : le résultat ne dépend pas du nombre de processus."""
        net = gen_butterfly()
        single = enumerate_exact(net, 2, get_field(2), batch_size=500)
        parallel = enumerate_exact(net, 2, get_field(2), workers=3, batch_size=500)
        assert single == parallel

    def test_table(self):
        """Test de la table : fractions exactes par puits et pour le réseau."""
        table = enumerate_exact(gen_plait(2, 1), 2, get_field(2)).to_table()
        assert table.column('scope') == ['t', 'network']
        assert table[0]['numerator'] == 55 and table[0]['denominator'] == 64
        assert table.metadata['free_coefficients'] == 8


class TestMonteCarlo:
    """Tests pour l'estimation Monte Carlo."""

    @pytest.mark.parametrize('net', [gen_butterfly(), gen_plait_union(2, 1, 2)],
                             ids=lambda net: net.name)
    def test_agrees_with_enumeration(self, net):
        """Test : chaque estimation à moins de 4 écarts-types de la valeur exacte."""
        gf = get_field(2)
        exact = enumerate_exact(net, 2, gf)
        estimate = monte_carlo(net, 2, gf, TRIALS, SEED)
        pairs = [(estimate.network_estimate, exact.network_probability)]
        pairs += [(estimate.sink_estimates[t], exact.sink_probabilities[t]) for t in net.sinks]
        for p_hat, p in pairs:
            assert abs(p_hat - float(p)) <= 4 * math.sqrt(p_hat * (1 - p_hat) / TRIALS)

    def test_plait_sink_estimate(self):
        """Test tresse (2,1) sur GF(2) : estimation proche de 55/64."""
        estimate = monte_carlo(gen_plait(2, 1), 2, get_field(2), TRIALS, SEED)
        p_hat = estimate.sink_estimates['t']
        assert abs(p_hat - 55 / 64) <= 4 * estimate.standard_error('t')

    def test_workers_identical(self):
        """Test : 1 et 8 processus, résultats identiques."""
        net = gen_butterfly()
        gf = get_field(2)
        single = monte_carlo(net, 2, gf, 20000, 7, workers=1, batch_size=1024)
        parallel = monte_carlo(net, 2, gf, 20000, 7, workers=8, batch_size=1024)
        assert single == parallel
        assert single.to_table().to_dict() == parallel.to_table().to_dict()

    def test_batch_size_irrelevant(self):
        """Test : le découpage en blocs ne change pas le résultat."""
        net = gen_plait_union(2, 1, 2)
        gf = get_field(3)
        assert monte_carlo(net, 2, gf, 3000, 1, batch_size=100) == monte_carlo(net, 2, gf, 3000, 1)

    def test_network_count_dominates(self):
        """Test : échecs réseau ≥ échecs de chaque puits."""
        result = monte_carlo(gen_butterfly(), 2, get_field(4), 5000, 3)
        assert all(result.network_failures >= count for count in result.sink_failures.values())

    @pytest.mark.parametrize('trials,workers', [(0, 1), (10, 0)])
    def test_invalid_parameters(self, trials, workers):
        """Test des paramètres invalides."""
        with pytest.raises(ConfigError):
            monte_carlo(gen_butterfly(), 2, get_field(2), trials, 1, workers=workers)

    def test_confidence_interval(self):
        """Test : approximation normale, intervalle de Wilson pour les petits comptes."""
        low, high, method = confidence_interval(500, 1000)
        assert method == 'normal'
        assert low < 0.5 < high
        low, high, method = confidence_interval(0, 1000)
        assert method == 'wilson'
        assert low == pytest.approx(0.0, abs=1e-12)
        assert high > 0.0

    def test_table(self):
        """Test de la table produite, sans nombre de processus."""
        table = monte_carlo(gen_plait(2, 0), 2, get_field(2), 1000, 5).to_table()
        assert table.column('scope') == ['t', 'network']
        assert 'workers' not in table.metadata
        assert table.metadata['seed'] == 5
