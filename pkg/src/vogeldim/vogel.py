"""Vogel-plane points, the library of known universal formulas, and checks.

Base rows (``alpha, beta, gamma``), one per family:

==========  ====================  ==========
family      point                 parameter
==========  ====================  ==========
sl          (-2, 2, N)            N
so          (-2, 4, N - 4)        N
sp          (-2, 1, N/2 + 2)      N (even)
exc         (-2, n + 4, 2n + 4)   n
==========  ====================  ==========

The sp row is the so row at ``-N``, rescaled by ``-1/2`` and with alpha and
beta swapped; it puts ``t = N/2 + 1`` and ``(w_x, w_y) = (3/2, -1/2)``.

Every point carries the tangent of its family (derivative in the
parameter).  It is used to resolve vanishing sinh factors whose
proportionality classes do not pair up, which is the same as taking the
rank-continuous limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence, Union

from .errors import Divergent, Indeterminate
from .symbolic import (
    RANK,
    UNIVERSAL,
    LinearForm,
    RationalFactorForm,
    SinhProduct,
    as_rational,
    classical_limit,
    evaluate,
    evaluate_rational,
)
from .weyl import RepSpec, dimension, qdim_at_rank, tensor_realization

__all__ = [
    "VogelPoint",
    "FormulaEntry",
    "FORMULAS",
    "EXCEPTIONAL",
    "PERMUTATIONS",
    "ADJOINT",
    "Y2_ALPHA",
    "Y2_BETA",
    "Y2_GAMMA",
    "X2",
    "DIM_E",
    "vogel_point",
    "specialize_to_series",
    "universal_value",
    "universal_dimension",
    "verify_formula",
    "square_identities",
    "VerificationReport",
    "SquareReport",
]

PERMUTATIONS = tuple(permutations(range(3)))

EXCEPTIONAL = {
    "A2": Fraction(-1),
    "G2": Fraction(-2, 3),
    "D4": Fraction(0),
    "F4": Fraction(1),
    "E6": Fraction(2),
    "E7": Fraction(4),
    "E8": Fraction(8),
}

_FAMILIES = ("sl", "so", "sp", "exc", "custom")


@dataclass(frozen=True)
class VogelPoint:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    family: str = "custom"
    parameter: Fraction | None = None
    permutation: tuple[int, int, int] = (0, 1, 2)
    tangent: tuple[Fraction, Fraction, Fraction] | None = None

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def t(self) -> Fraction:
        return self.alpha + self.beta + self.gamma

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)

    def assignment(self) -> dict[str, Fraction]:
        return dict(zip(UNIVERSAL, self.coords))

    def direction(self) -> dict[str, Fraction] | None:
        return None if self.tangent is None else dict(zip(UNIVERSAL, self.tangent))

    def on_line(self) -> bool:
        """Exact membership of the unpermuted coordinates in the family's line."""
        base = [None] * 3
        for i, j in enumerate(self.permutation):
            base[j] = self.coords[i]
        a, b, g = base
        if self.family == "sl":
            return a + b == 0
        if self.family == "so":
            return 2 * a + b == 0
        if self.family == "sp":
            return a + 2 * b == 0
        if self.family == "exc":
            return g == 2 * (a + b)
        return True

    def scaled(self, s) -> "VogelPoint":
        """The projectively equivalent point ``s * (alpha, beta, gamma)``."""
        s = as_rational(s)
        tangent = None if self.tangent is None else tuple(s * c for c in self.tangent)
        return VogelPoint(s * self.alpha, s * self.beta, s * self.gamma, self.family,
                          self.parameter, self.permutation, tangent)

    def __str__(self):
        label = self.family if self.parameter is None else f"{self.family}({self.parameter})"
        return f"{label} ({self.alpha}, {self.beta}, {self.gamma})"


def _base_row(family: str, p: Fraction):
    if family == "sl":
        if p.denominator != 1 or p < 2:
            raise ValueError(f"sl(N) needs an integer N >= 2, got {p}")
        return (Fraction(-2), Fraction(2), p), (0, 0, 1)
    if family == "so":
        if p.denominator != 1 or p < 3:
            raise ValueError(f"so(N) needs an integer N >= 3, got {p}")
        return (Fraction(-2), Fraction(4), p - 4), (0, 0, 1)
    if family == "sp":
        if p.denominator != 1 or p < 2 or p % 2:
            raise ValueError(f"sp(N) needs an even N >= 2, got {p}")
        return (Fraction(-2), Fraction(1), p / 2 + 2), (0, 0, Fraction(1, 2))
    if family == "exc":
        if p not in EXCEPTIONAL.values():
            raise ValueError(f"Exc(n) is a simple Lie algebra only for n in "
                             f"{sorted(EXCEPTIONAL.values())}, got {p}")
        return (Fraction(-2), p + 4, 2 * p + 4), (0, 1, 2)
    raise ValueError(f"unknown family {family!r}")


def vogel_point(family: str, parameter, permutation: Sequence[int] = (0, 1, 2)) -> VogelPoint:
    """Table point of ``family`` at ``parameter`` with coordinates reordered.

    ``permutation[i]`` is the index of the base coordinate placed in slot i.
    """
    p = as_rational(parameter)
    permutation = tuple(permutation)
    if sorted(permutation) != [0, 1, 2]:
        raise ValueError(f"not a permutation of (0, 1, 2): {permutation}")
    row, tangent = _base_row(family, p)
    coords = tuple(row[j] for j in permutation)
    tangent = tuple(Fraction(tangent[j]) for j in permutation)
    return VogelPoint(*coords, family=family, parameter=p, permutation=permutation,
                      tangent=tangent)


# formula library ----------------------------------------------------------

_A, _B, _G = (LinearForm.symbol(v, UNIVERSAL) for v in UNIVERSAL)
_T = _A + _B + _G

ADJOINT = SinhProduct.build(
    [(_G + 2 * _B + 2 * _A) / 2, (2 * _G + _B + 2 * _A) / 2, (2 * _G + 2 * _B + _A) / 2],
    [_G / 2, _B / 2, _A / 2],
    -1,
)

Y2_ALPHA = SinhProduct.build(
    [_T, (_B - 2 * _T) / 2, (_G - 2 * _T) / 2, (_B + _T) / 2, (_G + _T) / 2,
     (3 * _A - 2 * _T) / 2],
    [_A / 2, _A, _B / 2, _G / 2, (_A - _B) / 2, (_A - _G) / 2],
    -1,
)
Y2_BETA = Y2_ALPHA.rename({"alpha": "beta", "beta": "alpha"})
Y2_GAMMA = Y2_ALPHA.rename({"alpha": "gamma", "gamma": "alpha"})

X2 = SinhProduct.build(
    [(2 * _T - _A) / 2, (2 * _T - _B) / 2, (2 * _T - _G) / 2,
     (_T + _A) / 2, (_T + _B) / 2, (_T + _G) / 2,
     _T - _A, _T - _B, _T - _G],
    [_A / 2, _B / 2, _G / 2, _A, _B, _G,
     (_T - _A) / 2, (_T - _B) / 2, (_T - _G) / 2],
    1,
)

DIM_E = RationalFactorForm.build(
    [_A + _G, 2 * _A + _G, _A + 2 * _G, _B + _G, 2 * _B + _G, _B + 2 * _G, _T,
     2 * _A + _B + _G, _A + 2 * _B + _G, 2 * _A + 2 * _B + _G, 2 * _A + _B + 2 * _G,
     _A + 2 * _B + 2 * _G],
    [_A, _A, _B, _B, _G, _A - 3 * _B, _A - _B, _A - _B, 3 * _A - _B, _A - _G, _B - _G,
     _A + _B - 2 * _G],
    -64,
)

Body = Union[SinhProduct, RationalFactorForm]


@dataclass(frozen=True)
class FormulaEntry:
    name: str
    body: Body
    casimir: LinearForm | None
    associated: Mapping[str, RepSpec] = field(default_factory=dict)

    @property
    def z2_flag(self) -> bool:
        sl = self.associated.get("sl")
        return sl is not None and not sl.z2_symmetric

    @property
    def is_dimension_only(self) -> bool:
        return isinstance(self.body, RationalFactorForm)


def _assoc(sl, so, sp):
    return {"sl": RepSpec.sl(*sl), "so": RepSpec.so(so), "sp": RepSpec.sp(sp)}


FORMULAS: dict[str, FormulaEntry] = {
    "adjoint": FormulaEntry("adjoint", ADJOINT, 2 * _T,
                            _assoc(((1,), (1,)), (1, 1), (2,))),
    "Y2_alpha": FormulaEntry("Y2_alpha", Y2_ALPHA, 4 * _T - 2 * _A,
                             _assoc(((2,), (2,)), (2, 2), (4,))),
    "Y2_beta": FormulaEntry("Y2_beta", Y2_BETA, 4 * _T - 2 * _B,
                            _assoc(((1, 1), (1, 1)), (1, 1, 1, 1), (2, 2))),
    "Y2_gamma": FormulaEntry("Y2_gamma", Y2_GAMMA, 4 * _T - 2 * _G,
                             _assoc(((1,), (1,)), (2,), (1, 1))),
    "X2": FormulaEntry("X2", X2, 4 * _T,
                       _assoc(((2,), (1, 1)), (2, 1, 1), (3, 1))),
    "dimE": FormulaEntry("dimE", DIM_E, None,
                         _assoc(((3, 1), (2, 1, 1)), (3, 2, 1, 1, 1), (5, 2, 1))),
}


# specialization and evaluation --------------------------------------------

def _series_substitution(series: str, permutation=(0, 1, 2)) -> dict[str, LinearForm]:
    n = LinearForm.symbol("N", RANK)
    rows = {
        "sl": (LinearForm.constant(-2), LinearForm.constant(2), n),
        "so": (LinearForm.constant(-2), LinearForm.constant(4), n - 4),
        "sp": (LinearForm.constant(-2), LinearForm.constant(1), n / 2 + 2),
    }
    if series not in rows:
        raise ValueError(f"not a classical series: {series!r}")
    row = rows[series]
    return {v: row[j] for v, j in zip(UNIVERSAL, permutation)}


def specialize_to_series(f: Body, series: str, permutation=(0, 1, 2)) -> Body:
    """Restrict a universal formula to a classical line, as a form in ``N``.

    Identically vanishing numerator/denominator pairs cancel with the ratio
    of their multipliers (e.g. the factor 2 of ``(t - gamma)`` on sl).
    """
    mapping = _series_substitution(series, permutation)
    return f.substitute(mapping, RANK)


def universal_value(f: SinhProduct, point: VogelPoint, x: float) -> float:
    return evaluate(f, point.assignment(), x, point.direction())


def universal_dimension(f: Body, point: VogelPoint) -> Fraction:
    """Exact dimension at ``point``; 0/0 is resolved along the family tangent."""
    if isinstance(f, RationalFactorForm):
        return evaluate_rational(f, point.assignment(), point.direction())
    return classical_limit(f, point.assignment(), point.direction())


# verification -------------------------------------------------------------

@dataclass
class VerificationReport:
    formula: str
    series: str
    tol: float
    max_rel_dev: float = 0.0
    failures: list[dict] = field(default_factory=list)
    checked_ranks: list[int] = field(default_factory=list)
    skipped_ranks: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and bool(self.checked_ranks)

    def to_json(self) -> dict:
        return {
            "formula": self.formula,
            "series": self.series,
            "max_rel_dev": self.max_rel_dev,
            "failures": self.failures,
            "checked_ranks": self.checked_ranks,
            "skipped_ranks": self.skipped_ranks,
            "tol": self.tol,
            "passed": self.passed,
        }


def _rel(u: float, w: float) -> float:
    if w == 0:
        return 0.0 if u == 0 else math.inf
    return abs(u - w) / abs(w)


def verify_formula(entry: FormulaEntry, series: str, ranks: Sequence[int],
                   x_samples: Sequence[float], tol: float) -> VerificationReport:
    """Compare a universal formula with direct Weyl computations.

    The Weyl side is the associated representation at each rank, doubled for
    sl composites with ``lam != tau`` and for so diagrams that split in two.
    Ranks where the associated representation does not exist are skipped.
    """
    if series not in entry.associated:
        raise ValueError(f"{entry.name} has no associated {series} representation")
    report = VerificationReport(entry.name, series, tol)
    for N in ranks:
        real = tensor_realization(entry.associated[series], N)
        if real is None:
            report.skipped_ranks.append(N)
            continue
        spec, mult = real
        if series == "sl" and entry.z2_flag:
            mult *= 2
        point = vogel_point(series, N)
        report.checked_ranks.append(N)
        if entry.is_dimension_only:
            samples = [(None, lambda: float(universal_dimension(entry.body, point)),
                        lambda: float(mult * dimension(spec, N)))]
        else:
            weyl = qdim_at_rank(spec, N)
            samples = [(x, (lambda x=x: universal_value(entry.body, point, x)),
                        (lambda x=x: mult * evaluate(weyl, {}, x))) for x in x_samples]
        for x, universal, direct in samples:
            w = direct()
            try:
                u = universal()
            except (Divergent, Indeterminate) as exc:
                report.failures.append({"rank": N, "x": x, "universal": None, "weyl": w,
                                        "error": str(exc)})
                report.max_rel_dev = math.inf
                continue
            dev = _rel(u, w)
            report.max_rel_dev = max(report.max_rel_dev, dev)
            if not dev < tol:
                report.failures.append({"rank": N, "x": x, "universal": u, "weyl": w})
    return report


@dataclass
class SquareReport:
    point: VogelPoint
    tol: float
    rows: list[dict] = field(default_factory=list)
    classical: dict = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (not self.errors and self.classical.get("passed", False)
                and all(r["passed"] for r in self.rows))

    def to_json(self) -> dict:
        p = self.point
        return {
            "point": {"alpha": str(p.alpha), "beta": str(p.beta), "gamma": str(p.gamma),
                      "family": p.family,
                      "parameter": None if p.parameter is None else str(p.parameter)},
            "tol": self.tol,
            "rows": self.rows,
            "classical": self.classical,
            "errors": self.errors,
            "passed": self.passed,
        }


def square_identities(point: VogelPoint, x_samples: Sequence[float],
                      tol: float) -> SquareReport:
    """Check ``S^2 g = 1 + sum Y2`` and ``Lambda^2 g = g + X2`` at a point.

    With ``d(x)`` the adjoint value, the symmetric and antisymmetric squares
    have characters ``(d(x)^2 +- d(2x)) / 2``.
    """
    report = SquareReport(point, tol)
    a, dn, dr = point.assignment(), point.direction(), None
    ys = (Y2_ALPHA, Y2_BETA, Y2_GAMMA)
    try:
        for x in x_samples:
            d1 = evaluate(ADJOINT, a, x, dn)
            d2 = evaluate(ADJOINT, a, 2 * x, dn)
            sym = (d1 * d1 + d2) / 2
            anti = (d1 * d1 - d2) / 2
            y_sum = 1 + sum(evaluate(y, a, x, dn) for y in ys)
            x2 = d1 + evaluate(X2, a, x, dn)
            ds, da = _rel(y_sum, sym), _rel(x2, anti)
            report.rows.append({"x": x, "adjoint": d1, "sym_square": sym, "one_plus_Y2": y_sum,
                                "anti_square": anti, "adjoint_plus_X2": x2,
                                "rel_dev_sym": ds, "rel_dev_anti": da,
                                "passed": ds < tol and da < tol})
        dr = classical_limit(ADJOINT, a, dn)
        y_dims = [classical_limit(y, a, dn) for y in ys]
        x_dim = classical_limit(X2, a, dn)
        report.classical = {
            "adjoint": str(dr),
            "Y2": [str(y) for y in y_dims],
            "X2": str(x_dim),
            "passed": (dr * (dr + 1) / 2 == 1 + sum(y_dims)
                       and dr * (dr - 1) / 2 == dr + x_dim),
        }
    except (Divergent, Indeterminate) as exc:
        report.errors.append(str(exc))
    return report
