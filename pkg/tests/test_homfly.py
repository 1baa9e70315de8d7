import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import braid_words, fixture_grid
from gridknot.braid import BraidWord, bprime, grid_to_braid
from gridknot.family import b1_word, b2_word, flype_pair_7_2
from gridknot.grid import grid_to_planar
from gridknot.homfly import (
    DiagramTooLarge,
    NegativeZPower,
    OddZPower,
    eval_z0,
    eval_z2i,
    family_formula_z0,
    family_formula_z2i,
    homfly,
    homfly_braid,
    torus_formula_z0,
    torus_formula_z2i,
)
from gridknot.planar import braid_closure
from gridknot.poly import GaussLaurentPoly, LaurentPoly, x_poly
from oracles import hecke_homfly, sympy_terms

ONE = LaurentPoly.const(1)


def as_terms(p: LaurentPoly) -> dict:
    return dict(p.terms)


class TestSkein:
    def test_unknot(self):
        assert homfly_braid(1, ()) == ONE
        assert homfly_braid(3, (1, -2)) == ONE

    def test_unlink(self):
        # two-component unlink: (x - x^-1) / z
        assert homfly_braid(2, ()) == LaurentPoly({(1, -1): 1, (-1, -1): -1})

    def test_trefoil_skein_relation(self):
        # x P(s1^3) - x^-1 P(s1) = z P(s1^2)
        lhs = homfly_braid(2, (1, 1, 1)).shift(1, 0) - homfly_braid(2, (1,)).shift(-1, 0)
        rhs = homfly_braid(2, (1, 1)).shift(0, 1)
        assert lhs == rhs

    def test_mirror_inverts_x(self):
        p = homfly_braid(2, (1, 1, 1))
        q = homfly_braid(2, (-1, -1, -1))
        assert q == LaurentPoly({(-e, ze): c for (e, ze), c in p.terms.items()})

    @given(braid_words(max_len=7))
    @settings(max_examples=40, deadline=None)
    def test_matches_hecke_oracle(self, nw):
        n, letters = nw
        assert as_terms(homfly_braid(n, letters)) == sympy_terms(hecke_homfly(n, letters))

    @pytest.mark.parametrize("a,b", [(0, 0), (1, 0)])
    def test_family_matches_hecke_oracle(self, a, b):
        w = b1_word(a, b)
        assert as_terms(homfly_braid(4, w.letters)) == sympy_terms(hecke_homfly(4, w.letters))

    def test_cap(self):
        with pytest.raises(DiagramTooLarge):
            homfly_braid(2, (1,) * 9, crossing_cap=8)
        # nugatory crossings vanish before the cap applies
        assert homfly_braid(4, (1, 2, 3), crossing_cap=1) == ONE

    def test_connected_sum_multiplies(self):
        t = homfly_braid(2, (1, 1, 1))
        assert homfly_braid(3, (1, 1, 1, 2, 2, 2)) == t * t

    def test_flype_pair_same_knot(self):
        u, v = flype_pair_7_2()
        assert homfly_braid(4, u.letters) == homfly_braid(4, v.letters)


class TestEvaluations:
    def test_z0_refuses_negative_z(self):
        with pytest.raises(NegativeZPower):
            eval_z0(homfly_braid(2, ()))

    def test_z2i_strict(self):
        p = LaurentPoly({(0, 1): 1})
        assert eval_z2i(p) == GaussLaurentPoly({0: (0, 2)})
        with pytest.raises(OddZPower):
            eval_z2i(p, strict=True)

    def test_z2i_even(self):
        p = LaurentPoly({(0, 2): 3, (2, 0): 1})
        assert eval_z2i(p) == GaussLaurentPoly({0: (-12, 0), 2: (1, 0)})

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_torus_forms(self, p):
        h = homfly_braid(2, (1,) * (2 * p + 1))
        assert eval_z0(h) == torus_formula_z0(p)
        assert eval_z2i(h, strict=True) == torus_formula_z2i(p)

    @pytest.mark.parametrize("a,b", [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)])
    def test_family_forms(self, a, b):
        h1 = homfly_braid(4, b1_word(a, b).letters)
        h2 = homfly_braid(4, b2_word(a, b).letters)
        assert h1 == h2
        assert eval_z0(h1) == family_formula_z0(a, b)
        assert eval_z2i(h1, strict=True) == family_formula_z2i(a, b)

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_family_z0_sums_to_one(self, a, b):
        # P(x = 1, z = 0) = 1 for every knot
        assert sum(family_formula_z0(a, b).terms.values()) == 1


class TestPolyText:
    @given(st.dictionaries(st.tuples(st.integers(-5, 5), st.integers(0, 5)), st.integers(-9, 9), max_size=6))
    def test_parse_round_trip(self, terms):
        p = LaurentPoly(terms)
        assert LaurentPoly.parse(str(p)) == p

    def test_x_poly(self):
        assert str(x_poly({})) == "0"


class TestGridClosure:
    @pytest.mark.parametrize("name", ["trefoil_5.json", "figure_eight_6.json", "g1_1_1.json", "g2_1_1.json"])
    def test_grid_and_braid_agree(self, name):
        G = fixture_grid(name)
        ref = homfly(grid_to_planar(G))
        for B in (grid_to_braid(G), bprime(G)):
            assert homfly_braid(B.strands, B.letters, crossing_cap=40) == ref

    def test_figure_eight(self):
        G = fixture_grid("figure_eight_6.json")
        assert homfly(grid_to_planar(G)) == homfly_braid(3, (1, -2, 1, -2))

    def test_closure_components(self):
        assert braid_closure(3, (1,)).components == 2
        assert BraidWord(3, (1,)).closure_components() == 2
