"""Acceptance criteria, one marker per criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ADJOINT_DIMENSIONS, dynkin_labels as oracle_labels, weyl_dimension
from vogeldim.reconstruct import build_problem, limit_polynomial, solve, soundness
from vogeldim.symbolic import (
    RANK,
    UNIVERSAL,
    LinearForm,
    RationalFactorForm,
    SinhProduct,
    classical_limit,
    evaluate,
    evaluate_rational,
)
from vogeldim.vogel import (
    ADJOINT,
    DIM_E,
    EXCEPTIONAL,
    FORMULAS,
    specialize_to_series,
    square_identities,
    verify_formula,
    vogel_point,
)
from vogeldim.weyl import (
    RepSpec,
    dimension,
    qdim_at_rank,
    rank_interpolate,
    tensor_realization,
)
from vogeldim.young import YoungDiagram, horizontal_sum, transpose, vertical_sum

N = LinearForm.symbol("N", RANK)
A, B, G = (LinearForm.symbol(v, UNIVERSAL) for v in UNIVERSAL)
F = Fraction
Y = YoungDiagram


def criterion(number, title):
    return pytest.mark.criterion(number, title)


# 1 -------------------------------------------------------------------------

TABLE_ROWS = {
    # name: (lambda, tau, so, sp)
    "adjoint": ((1,), (1,), (1, 1), (2,)),
    "Y2_alpha": ((2,), (2,), (2, 2), (4,)),
    "Y2_beta": ((1, 1), (1, 1), (1, 1, 1, 1), (2, 2)),
    "Y2_gamma": ((1,), (1,), (2,), (1, 1)),
    "X2": ((2,), (1, 1), (2, 1, 1), (3, 1)),
}


@criterion(1, "square-of-adjoint table: sl pair sums give the listed so/sp diagrams")
@pytest.mark.parametrize("row", sorted(TABLE_ROWS))
def test_c1_table_rows(row):
    lam, tau, so, sp = TABLE_ROWS[row]
    v, h = vertical_sum(Y(lam), Y(tau)), horizontal_sum(Y(lam), Y(tau))
    assert (v, h) == (Y(so), Y(sp)), f"sums give so ({v}), sp ({h}); listed so ({Y(so)}), sp ({Y(sp)})"


# 2 -------------------------------------------------------------------------

ADJOINT_LINES = {
    "sl": (RepSpec.sl((1,), (1,)), [N - 1, N + 1], [1, 1]),
    "so": (RepSpec.so((1, 1)), [N / 2, N - 1, N - 4], [1, 2, N / 2 - 2]),
    # sinh(x(2n+1)/4) sinh(x n/4) sinh(x(n+2)/2) / sinh(x/4) sinh(x/2) sinh(x(n+2)/4), N = 2n
    "sp": (RepSpec.sp((2,)), [(N + 1) / 2, N / 4, (N + 4) / 2],
           [F(1, 2), 1, (N + 4) / 4]),
}


def _check_line(spec, expected):
    fitted = rank_interpolate(spec)
    assert fitted == expected
    for n in range(6, 31):
        real = tensor_realization(spec, n)
        if not spec.admissible(n) or real is None:
            continue
        if real[1] == 1:
            assert expected.at({"N": n}) == qdim_at_rank(spec, n)
        else:
            # an O(N) diagram of height N/2 splits into two equal irreducibles
            for x in (0.2, 0.9):
                value = evaluate(expected, {"N": n}, x, {"N": 1})
                assert math.isclose(value, 2 * evaluate(qdim_at_rank(real[0], n), {}, x),
                                    rel_tol=1e-12)


@criterion(2, "adjoint quantum dimensions on the three classical lines")
@pytest.mark.parametrize("series", ["sl", "so", "sp"])
def test_c2_adjoint_lines(series):
    spec, num, den = ADJOINT_LINES[series]
    _check_line(spec, SinhProduct.build(num, den, 1, RANK))


# 3 -------------------------------------------------------------------------

E_LINES = {
    "sl": (RepSpec.sl((3, 1), (2, 1, 1)),
           [N - 4, N - 2, N - 1, N - 1, N + 1, N + 1, N + 2, N + 4],
           [1, 1, 1, 1, 2, 2, 4, 4]),
    "so": (RepSpec.so((3, 2, 1, 1, 1)),
           [N / 2, (N + 4) / 2, N - 10, N - 6, N - 4, N - 2, N - 2, N - 1, N, N + 2],
           [1, 1, 1, 2, 3, 3, 5, 7, (N - 10) / 2, (N - 2) / 2]),
    "sp": (RepSpec.sp((5, 2, 1)),
           [(N - 4) / 4, N / 4, (N - 2) / 2, N / 2, (N + 1) / 2, (N + 2) / 2, (N + 2) / 2,
            (N + 4) / 2, (N + 6) / 2, (N + 10) / 2],
           [F(1, 2), F(1, 2), F(1, 2), 1, F(3, 2), F(3, 2), F(5, 2), F(7, 2),
            (N + 2) / 4, (N + 10) / 4]),
}


@criterion(3, "E-multiplet quantum dimensions on the three classical lines")
@pytest.mark.parametrize("series", ["sl", "so", "sp"])
def test_c3_e_lines(series):
    spec, num, den = E_LINES[series]
    _check_line(spec, SinhProduct.build(num, den, 1, RANK))


# 4 -------------------------------------------------------------------------

@criterion(4, "adjoint reconstruction is unique and gives sinh(alpha x/4) sinh(beta x/4)")
def test_c4_adjoint_reconstruction():
    solutions = solve(build_problem((1,), (1,)))
    assert len(solutions) == 1
    [sol] = solutions
    assert Counter(sol.pairs) == Counter([(1, 1), (1, 2)])
    assert sol.y_k is None
    den = sol.denominator_product
    assert abs(den.prefactor) == 1
    assert Counter(den.numerator) == Counter([A / 2, B / 2])


# 5 -------------------------------------------------------------------------

@criterion(5, "E reconstruction is unique with y_k = 2 and the expected denominator")
def test_c5_e_reconstruction():
    solutions = solve(build_problem((3, 1), (2, 1, 1)))
    assert len(solutions) == 1
    [sol] = solutions
    assert sol.y_k == 2
    assert Counter(sol.pairs) == Counter([(1, 1), (1, 1), (1, 2), (1, 2), (2, 3), (2, 3),
                                          (4, 5), (4, 7)])
    den = sol.denominator_product
    assert abs(den.prefactor) == 1
    assert Counter(den.numerator) == Counter({A / 2: 2, B / 2: 2, (B - A) / 2: 2,
                                              (B - 3 * A) / 2: 1, (3 * B - A) / 2: 1})
    poly = limit_polynomial(sol)
    target = RationalFactorForm.build(
        [A, A, B, B, B - A, B - A, B - 3 * A, 3 * B - A], [], 1, UNIVERSAL)
    assert poly.numerator == target.numerator and poly.denominator == ()
    assert poly.prefactor != 0


# 6 -------------------------------------------------------------------------

@criterion(6, "adjoint, X2 and Y2 formulas agree with Weyl data to 1e-9")
@pytest.mark.parametrize("series", ["sl", "so", "sp"])
@pytest.mark.parametrize("name", ["adjoint", "X2", "Y2_alpha", "Y2_beta", "Y2_gamma"])
def test_c6_formula_verification(name, series):
    ranks = range(6, 17) if series != "sp" else range(6, 17, 2)
    report = verify_formula(FORMULAS[name], series, ranks, [0.1, 0.25, 0.5, 1.0], 1e-9)
    assert report.passed, report.failures
    assert report.max_rel_dev < 1e-9
    assert report.checked_ranks


# 7 -------------------------------------------------------------------------

def _sl_poly(n):
    return F((n - 4) * (n - 2) * (n - 1) ** 2 * (n + 1) ** 2 * (n + 2) * (n + 4), 32)


def _so_poly(n):
    return F((n - 6) * (n - 4) * (n - 2) * (n - 1) * n * n * (n + 2) * (n + 4), 630)


def _sp_poly(n):
    return F((n - 4) * (n - 2) * n * n * (n + 1) * (n + 2) * (n + 4) * (n + 6), 630)


@criterion(7, "universal dim E reproduces the three classical dimension polynomials")
@pytest.mark.parametrize("series", ["sl", "so", "sp"])
def test_c7_dim_e(series):
    poly = {"sl": _sl_poly, "so": _so_poly, "sp": _sp_poly}[series]
    for n in range(6, 21):
        if series == "sp" and n % 2:
            continue
        point = vogel_point(series, n)
        value = evaluate_rational(DIM_E, point.assignment(), point.direction())
        assert value == poly(n)
        if series == "sl":
            assert value == 2 * dimension(RepSpec.sl((3, 1), (2, 1, 1)), n)


# 8 -------------------------------------------------------------------------

SQUARE_POINTS = (
    [("sl", n) for n in range(6, 15)]
    + [("so", n) for n in range(6, 15)]
    + [("sp", n) for n in range(6, 15, 2)]
    + [("exc", EXCEPTIONAL[k]) for k in ("G2", "F4", "E6", "E7", "E8")]
)


@criterion(8, "symmetric and antisymmetric squares of the adjoint decompose to 1e-9")
@pytest.mark.parametrize("family, param", SQUARE_POINTS)
def test_c8_square_identities(family, param):
    report = square_identities(vogel_point(family, param), [0.1, 0.3, 0.7], 1e-9)
    assert report.passed, (report.errors, report.rows)


# 9 -------------------------------------------------------------------------

def _adjoint_labels(family, n):
    diagram = {"sl": ((1,), (1,)), "so": ((1, 1), ()), "sp": ((2,), ())}[family]
    return oracle_labels(family, n, *diagram)


@criterion(9, "classical limits of the adjoint formula are the adjoint dimensions")
@pytest.mark.parametrize("family", ["sl", "so", "sp"])
def test_c9_classical_dimensions(family):
    closed = {"sl": lambda n: n * n - 1, "so": lambda n: n * (n - 1) // 2,
              "sp": lambda n: (n // 2) * (n + 1)}[family]
    for n in range(5, 31):
        if family == "sp" and n % 2:
            continue
        point = vogel_point(family, n)
        d = classical_limit(ADJOINT, point.assignment(), point.direction())
        assert d == closed(n)
        assert d == weyl_dimension(family, n, _adjoint_labels(family, n))


@criterion(9, "classical limits of the adjoint formula are the adjoint dimensions")
@pytest.mark.parametrize("name", sorted(ADJOINT_DIMENSIONS))
def test_c9_exceptional_dimensions(name):
    point = vogel_point("exc", EXCEPTIONAL[name])
    assert classical_limit(ADJOINT, point.assignment(), point.direction()) == \
        ADJOINT_DIMENSIONS[name]


# 10 ------------------------------------------------------------------------

diagrams = st.lists(st.integers(1, 6), max_size=6).map(
    lambda rows: Y(tuple(sorted(rows, reverse=True))))


@st.composite
def small_reps(draw):
    series = draw(st.sampled_from(["sl", "so", "sp"]))
    rows = st.lists(st.integers(1, 3), max_size=3).map(lambda r: tuple(sorted(r, reverse=True)))
    if series == "sl":
        spec = RepSpec.sl(draw(rows), draw(rows))
        n = draw(st.integers(spec.min_rank(), 8))
    else:
        spec = RepSpec(series, Y(draw(rows)))
        n = draw(st.integers(spec.min_rank(), 9))
        n += series == "sp" and n % 2
    return spec, n


@criterion(10, "property suites")
@settings(max_examples=1000)
@given(diagrams, diagrams)
def test_c10_transpose_duality(a, b):
    assert horizontal_sum(a, b) == transpose(vertical_sum(transpose(a), transpose(b)))


@criterion(10, "property suites")
@settings(max_examples=60, deadline=None)
@given(small_reps(), st.floats(0.05, 2.0))
def test_c10_qdim_even_in_x(case, x):
    spec, n = case
    p = qdim_at_rank(spec, n)
    assert math.isclose(evaluate(p, {}, x), evaluate(p, {}, -x), rel_tol=1e-12)


@criterion(10, "property suites")
@settings(max_examples=100, deadline=None)
@given(small_reps())
def test_c10_oracle_equivalence(case):
    spec, n = case
    labels = oracle_labels(spec.series, n, spec.lam.rows, spec.tau.rows)
    assert classical_limit(qdim_at_rank(spec, n)) == weyl_dimension(spec.series, n, labels)


COMPOSITES = [((1,), (1,)), ((2,), (2,)), ((1, 1), (1, 1)), ((2,), (1, 1)),
              ((3, 1), (2, 1, 1)), ((2, 1), (2, 1)), ((3,), (2, 1)), ((2, 2), (3, 1))]


@criterion(10, "property suites")
@pytest.mark.parametrize("lam, tau", COMPOSITES)
def test_c10_reconstruction_soundness(lam, tau):
    problem = build_problem(lam, tau)
    solutions = solve(problem)
    assert solutions
    observed = {"sl": problem.X, "so": problem.O_so, "sp": problem.O_sp}
    for sol in solutions:
        assert soundness(sol, problem)
        for series, values in observed.items():
            line = specialize_to_series(sol.universal_factor, series)
            assert tuple(line.constant_args("denominator")) == values
