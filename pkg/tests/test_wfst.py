import math

import numpy as np
import pytest

from tropwfst import (Arc, ParseError, SymbolTable, UnknownSymbolError, Wfst,
                      build_matrices, parse_text, pointwise_min,
                      serialize_text, validate)

from conftest import FIG1_TEXT, FIG2_TEXT
from generators import random_acyclic_machine, split_epsilons

INF = math.inf


class TestValidate:
    def test_fig1_clean(self, fig1):
        assert validate(fig1) == []

    def test_duplicate_pair(self):
        m = Wfst(2, [Arc(0, 1, 1, 1, 1.0), Arc(0, 1, 2, 2, 2.0)],
                 np.array([0.0, INF]), np.array([INF, 0.0]),
                 SymbolTable(["a", "b"]), SymbolTable(["a", "b"]))
        assert any("duplicate" in p for p in validate(m))

    def test_index_out_of_range(self):
        m = Wfst(3, [Arc(7, 1, 0, 0, 1.0)],
                 np.array([0.0, INF, INF]), np.array([INF, INF, 0.0]))
        assert any("out of range" in p for p in validate(m))

    def test_nonfinite_weight_and_missing_endpoints(self):
        m = Wfst(2, [Arc(0, 1, 0, 0, INF)],
                 np.full(2, INF), np.full(2, INF))
        problems = validate(m)
        assert any("non-finite" in p for p in problems)
        assert any("no initial" in p for p in problems)
        assert any("no final" in p for p in problems)


class TestBuildMatrices:
    def test_fig2_split(self, fig2):
        view = build_matrices(fig2)
        assert view.E[0, 1] == 1.0
        assert np.isinf(np.delete(view.E.ravel(), 1)).all()
        assert view.A_eps[1, 2] == 2.0
        assert np.array_equal(view.A, pointwise_min(view.A_eps, view.E))

    def test_no_eps_arcs(self, fig1):
        assert np.isinf(build_matrices(fig1).E).all()

    def test_only_eps_arcs(self):
        m = parse_text("I 0 0\n0 1 <eps> <eps> 2\nF 1 0\n")
        view = build_matrices(m)
        assert np.isinf(view.A_eps).all()
        assert view.E[0, 1] == 2.0

    def test_label_matrices(self, fig1):
        view = build_matrices(fig1)
        assert view.sigma_i[0, 1] == fig1.isyms.id_of("a")
        assert view.sigma_o[1, 3] == fig1.osyms.id_of("Z")
        assert view.sigma_i[3, 0] == -1

    def test_rejects_invalid(self):
        m = Wfst(2, [], np.full(2, INF), np.full(2, INF))
        with pytest.raises(ValueError):
            build_matrices(m)

    @pytest.mark.parametrize("seed", range(20))
    def test_decomposition_on_random_machines(self, seed):
        rng = np.random.default_rng(seed)
        m = split_epsilons(rng, random_acyclic_machine(rng),
                           int(rng.integers(0, 4)))
        view = build_matrices(m)
        assert np.array_equal(view.A, pointwise_min(view.A_eps, view.E))


class TestTextFormat:
    def test_fig1_round_trip(self, fig1):
        assert serialize_text(fig1) == FIG1_TEXT
        assert fig1.n_states == 5
        assert len(fig1.arcs) == 4

    def test_single_state_acceptor(self):
        m = parse_text("I 0 0\nF 0 0\n")
        assert m.n_states == 1 and not m.arcs
        assert serialize_text(m) == "I 0 0\nF 0 0\n"

    def test_too_few_fields(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_text("0 1 a\n")

    def test_bad_weight(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_text("I 0 0\n0 1 a A oops\n")

    def test_unknown_symbol_with_fixed_tables(self):
        with pytest.raises(UnknownSymbolError):
            parse_text("I 0 0\n0 1 zz zz 1\nF 1 0\n",
                       isyms=SymbolTable(["a"]), osyms=SymbolTable(["a"]))

    def test_fractional_weights_round_trip(self):
        text = "I 0 0.5\n0 1 a A 0.1\nF 1 2\n"
        assert serialize_text(parse_text(text)) == text

    def test_fig2_round_trip(self, fig2):
        assert serialize_text(fig2) == FIG2_TEXT

    @pytest.mark.parametrize("seed", range(20))
    def test_round_trip_random(self, seed):
        rng = np.random.default_rng(1000 + seed)
        m = split_epsilons(rng, random_acyclic_machine(rng),
                           int(rng.integers(0, 3)))
        text = serialize_text(m)
        again = parse_text(text)
        assert serialize_text(again) == text
        assert validate(again) == []
