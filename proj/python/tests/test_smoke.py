from fractions import Fraction

import pytest

import gwtqft


def test_partitions_and_characters():
    assert gwtqft.partitions(3) == [[3], [2, 1], [1, 1, 1]]
    assert gwtqft.character_table(3) == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
    assert gwtqft.centralizer_order([2, 2, 1]) == 8


def test_series_values():
    assert gwtqft.d1_relative(0, order=6) == [1, 0, Fraction(1, 12), 0, Fraction(1, 240), 0]
    assert gwtqft.cap(2, [2], order=4) == [0, Fraction(-1, 4), 0, Fraction(-1, 24)]
    assert gwtqft.d2_closed(1, order=4) == [2, 0, 0, 0]
    assert gwtqft.d2_closed(0, order=8) == gwtqft.fp_genus0(2, order=8)
    plus, minus = gwtqft.d2_eigenvalues(order=3)
    assert plus[0] == minus[0] == 4


def test_gauge_theory_and_enumeration():
    assert gwtqft.hurwitz(2, 2) == 8
    assert gwtqft.gauge_invariant(3, 2) == 81
    b = [[2, 1], [2, 1], [3]]
    assert gwtqft.hurwitz(3, 0, b, workers=2) == gwtqft.gauge_invariant(3, 0, b)
    assert gwtqft.relative("dw", 2, 0, [[2], [2]], order=2) == [Fraction(1, 2), 0]


def test_lifting_and_connected():
    lambdas = gwtqft.lift_eigenvalues(gwtqft.class_algebra_json(3, order=2))
    assert sorted(l[0] for l in lambdas) == [9, 36, 36]
    rows = [["1"]] + [[str(gwtqft.gauge_invariant(d, 1))] for d in range(1, 5)]
    n = gwtqft.connected(rows)
    assert [r[0] for r in n] == [0, 1, Fraction(3, 2), Fraction(4, 3), Fraction(7, 4)]
    assert gwtqft.domain_genus(2, 1, 2) == 2


def test_errors():
    with pytest.raises(gwtqft.Error):
        gwtqft.cap(3, [2])
    with pytest.raises(gwtqft.Error):
        gwtqft.hurwitz(5, 3)
    code, out, err = gwtqft.run_cli(["relative", "--model", "dw", "--d", "3", "--boundaries", "2,2"])
    assert code == 2 and "partition sums to 4, expected 3" in err


def test_cli_and_verify():
    code, out, _ = gwtqft.run_cli(["hurwitz", "--d", "2", "--genus", "2"])
    assert (code, out) == (0, "8\n")
    results = gwtqft.verify("d2", order=8)
    assert results and all(passed for _, _, passed, _ in results)
