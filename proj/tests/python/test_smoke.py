import pytest

import zamobelt


def test_laurent_roundtrip():
    p = zamobelt.LaurentPoly("x1^-1 + x1^-1*x2", 2)
    assert str(p) == "x1^-1*x2 + x1^-1"
    q = zamobelt.LaurentPoly("x1 - 1", 2)
    assert (p * q).div_exact(q) == p
    assert p.denominator_vector() == [1, 0]


def test_not_divisible_is_reported():
    a = zamobelt.LaurentPoly("x1 + x2", 2)
    b = zamobelt.LaurentPoly("x2 + 1", 2)
    with pytest.raises(zamobelt.ZamobeltError) as info:
        a.div_exact(b)
    assert info.value.code == "NotDivisible"
    assert not info.value.falsification


def test_a2_belt():
    traj = zamobelt.run_belt("A2", 10)
    assert traj[0] == ["x1", "x2"]
    assert traj[1][0] == "x1^-1*x2 + x1^-1"
    assert traj[10] == traj[0]
    hp = zamobelt.half_period("A2")
    assert hp["N"] == 5
    assert hp["sigma"] == "(1 2)"
    assert hp["color_behavior"] == "reversing"


def test_figure_one():
    hp = zamobelt.half_period("fig1-A5starD4")
    assert (hp["N"], hp["sigma"]) == (10, "(8 9)")
    assert zamobelt.frozen_isomorphism("fig1-A5starD4") == "(8 9)"


def test_bigraph_and_mutation():
    g = zamobelt.bigraph("A2xA2")
    assert g["n"] == 4 and g["hGamma"] == 3 and g["hDelta"] == 3
    assert zamobelt.mutate([[0, 1], [-1, 0]], 0) == [[0, -1], [1, 0]]
    assert zamobelt.is_recurrent('{"n": 2, "b": [[0, 2], [-1, 0]]}')
    assert not zamobelt.is_recurrent('{"n": 3, "b": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]}')


def test_green_and_tropical():
    certs = zamobelt.green_certificates("B2")
    assert certs["whiteFirst"]["lengths"] == [4, 2]
    assert certs["whiteFirst"]["finalCIsMinusPermutation"]
    assert zamobelt.tropical_period("A2", ["-1", "-1"], 40) == 10
    census = zamobelt.colored_census("D4")
    assert (census["red"], census["blue"], census["ties"]) == (24, 8, 0)


def test_experiment_runner():
    code, report = zamobelt.run_experiment("halfperiod", "fig1-A5starD4")
    assert code == 0
    assert report["sigma"] == "(8 9)"
    code, csv = zamobelt.run_experiment("census", "A2", format="csv")
    assert code == 0
    assert csv.splitlines()[1] == "A2,0,10,6,4,0"
    code, report = zamobelt.run_experiment("halfperiod", "Q9")
    assert code == 2
    assert report["error"] == "UnknownName"
