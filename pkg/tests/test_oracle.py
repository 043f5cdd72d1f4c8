import pytest

from pair014 import chromatic_number, gen_gnp, is_k_colorable

from _helpers import complete, cycle, empty, petersen


class TestIsKColorable:
    def test_k4_needs_four(self):
        assert is_k_colorable(complete(4), 3) is None
        col = is_k_colorable(complete(4), 4)
        assert col is not None and col.is_proper(complete(4))

    def test_petersen(self):
        g = petersen()
        assert is_k_colorable(g, 2) is None
        col = is_k_colorable(g, 3)
        assert col is not None
        assert col.is_proper(g)
        assert col.num_colors <= 3

    def test_rejects_nonpositive_k(self):
        with pytest.raises(ValueError):
            is_k_colorable(empty(2), 0)

    def test_monotone_in_k(self):
        for seed in range(8):
            g = gen_gnp(9, 0.5, seed)
            chi = chromatic_number(g).chromatic_number
            for k in range(1, g.n + 1):
                attainable = is_k_colorable(g, k) is not None
                assert attainable == (k >= chi)


class TestChromaticNumber:
    def test_odd_cycle(self):
        assert chromatic_number(cycle(5)).chromatic_number == 3

    def test_empty_graph(self):
        assert chromatic_number(empty(7)).chromatic_number == 1

    def test_complete(self):
        assert chromatic_number(complete(6)).chromatic_number == 6

    def test_witness_is_optimal_coloring(self):
        for seed in range(10):
            g = gen_gnp(10, 0.5, 100 + seed)
            result = chromatic_number(g)
            assert result.witness.is_proper(g)
            assert result.witness.num_colors == result.chromatic_number
