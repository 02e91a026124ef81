from fractions import Fraction

import pytest

import babylon


def test_parse_and_render():
    assert babylon.parse("0;0,6") == Fraction(1, 600)
    assert babylon.parse("14,24") == 864
    assert babylon.parse("1,30", floating=True) == Fraction(3, 2)
    assert babylon.parse_floating("2,24", 3) == 518400
    assert babylon.parse_floating("6", -2) == Fraction(1, 600)
    assert babylon.render(Fraction(1, 600)) == "0;0,6"
    assert babylon.render(Fraction(2, 3), floating=True) == "40"
    assert babylon.to_string(Fraction(1, 7)) == "1/7"


def test_malformed_numeral():
    with pytest.raises(babylon.BabylonError) as info:
        babylon.parse("7,60")
    assert info.value.kind == "MalformedNumeral"
    assert isinstance(info.value, ValueError)


def test_arithmetic():
    assert babylon.combine("*", "2,24,0,0", babylon.reciprocal("10,0")) == 864
    assert babylon.reciprocal(Fraction(2, 3)) == Fraction(3, 2)
    assert babylon.has_finite_expansion(Fraction(1, 81))
    assert not babylon.has_finite_expansion(Fraction(1, 7))
    assert babylon.classify_regular(2 * 7 * 9) == {"regular": False, "smooth_part": 18, "rough_part": 7}
    assert babylon.sqrt_exact("3,10,26,24") == babylon.parse("13,48")
    with pytest.raises(babylon.BabylonError) as info:
        babylon.sqrt_exact(2)
    assert info.value.kind == "NotAPerfectSquare"
    with pytest.raises(babylon.BabylonError) as info:
        babylon.combine("-", 1, 2)
    assert info.value.kind == "NegativeResult"


def test_big_values_are_exact():
    v = Fraction(3**80, 2**70)
    assert babylon.sqrt_exact(v * v) == v
    assert babylon.parse(babylon.render(v)) == v


def test_evaluate():
    assert babylon.evaluate("2,24,0,0 * recip(10,0)") == 864
    with pytest.raises(babylon.BabylonError):
        babylon.evaluate("1 +")


def test_solvers():
    assert babylon.solve_sum_product("49,12", "6,54,43,12") == (2304, 648)
    assert babylon.solve_product_ratio(600, Fraction(2, 3)) == (20, 30)
    with pytest.raises(babylon.BabylonError) as info:
        babylon.solve_sum_product(1, 1)
    assert info.value.kind == "NegativeDiscriminant"


def test_geometry():
    assert babylon.intercept_fourth(3, 2, 10) == 15
    assert babylon.transversal_w(20, 30, 30) == 18
    assert babylon.bisect_trapezoid(7, 1, 6) == {"d_squared": 25, "upper_area": 12, "lower_area": 12}
    r = babylon.check_intercept((0, 0), (-1, 0), (2, 0), (0, -1), (0, 2))
    assert r == {"holds": True, "case": "apex_between", "ratio_squared": Fraction(1, 4)}
    t1 = [(0, 0), (4, 0), (0, 3)]
    t2 = [(0, 0), (8, 0), (0, 6)]
    assert babylon.similar_sss(t1, t2) == Fraction(1, 4)
    assert babylon.similar_sas(t1, t2)
    assert babylon.similar_sss(t1, [(0, 0), (1, 0), (0, 1)]) is None
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert babylon.is_transversal(square, (0, Fraction(1, 2)), (1, Fraction(1, 2)))
    assert not babylon.is_transversal(square, (0, 0), (0, 1))


def test_replay():
    solution, trace = babylon.solve_smt18()
    assert solution == {"x": 20, "y": 30, "z": 30, "w": 18}
    assert babylon.diff_trace(trace, babylon.canonical_trace()) == ""
    assert all(babylon.verify_solution(solution).values())
    assert "x\tR3\tattested\ty * ratio_k\t= 20" in trace


def test_cli():
    code, out, err = babylon.run_cli(["solve", "sumprod", "49,12", "6,54,43,12"])
    assert (code, out, err) == (0, "38,24  10,48\n", "")
    assert babylon.run_cli(["eval", "1/0"])[0] == 3
