"""Reconstruction of the gamma-independent denominator of a universal qdim.

Starting from an sl composite ``D(lam, tau)`` with ``|lam| = |tau|``, the
associated so and sp diagrams are the vertical and horizontal sums.  The
rank-independent denominator arguments of the three quantum dimensions are
the data:

* sl gives ``X = {x_i}``,
* so gives ``O_so``, the multiset of ``y_i`` (with one ``y_k`` halved when
  the Z2 correction is active),
* sp gives ``O_sp``, the multiset of ``|3 x_i / 2 - y_i / 2|`` (with one
  ``y_k / 2`` halved again).

A universal factor ``sinh((x w_x + y w_y) x/2)`` specializes on the three
lines to ``sinh(x_i x/2)``, ``sinh(y_i x/2)`` and ``sinh((3x_i - y_i)/2 x/2)``
because of the values of ``(w_x, w_y)``.  The solver pairs the ``x_i`` with
the ``y_i`` in every possible way and keeps the pairings consistent with
all three observations.

When ``lam != tau`` the sl value is the sum of two Z2 images.  The factor

    sinh((alpha + beta) y_k/2 x/2) / sinh((alpha + beta) y_k/4 x/2)

equals 2 on sl (where ``alpha + beta = 0``) and cancels one ``y_k``
elsewhere, which is the origin of the replacements above.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import AreaMismatch, Infeasible, ProblemTooLarge
from .symbolic import (
    UNIVERSAL,
    LinearForm,
    RationalFactorForm,
    SinhProduct,
    format_rational,
)
from .weyl import RepSpec, rank_interpolate
from .young import YoungDiagram, horizontal_sum, vertical_sum

__all__ = [
    "W_X",
    "W_Y",
    "W_VALUES",
    "ReconstructionProblem",
    "ReconstructionSolution",
    "gamma_free_args",
    "build_problem",
    "solve",
    "limit_polynomial",
    "soundness",
    "MAX_FACTORS",
]

MAX_FACTORS = 16

_A, _B = LinearForm.symbol("alpha", UNIVERSAL), LinearForm.symbol("beta", UNIVERSAL)

W_X = -(2 * _A + _B) / 2
W_Y = (_A + _B) / 2

# (w_x, w_y) on the base point of each classical line
W_VALUES = {
    "sl": (Fraction(1), Fraction(0)),
    "so": (Fraction(0), Fraction(1)),
    "sp": (Fraction(3, 2), Fraction(-1, 2)),
}


def gamma_free_args(p: SinhProduct, side: str = "denominator") -> list[Fraction]:
    """Sorted constant arguments of a product over ``N`` on one side."""
    if side not in ("numerator", "denominator"):
        raise ValueError(f"side must be numerator or denominator, not {side!r}")
    return p.constant_args(side)


def _multiset(values) -> list[str]:
    return [format_rational(v) for v in sorted(values)]


@dataclass(frozen=True)
class ReconstructionProblem:
    lam: YoungDiagram
    tau: YoungDiagram
    X: tuple[Fraction, ...]
    O_so: tuple[Fraction, ...]
    O_sp: tuple[Fraction, ...]
    z2_active: bool
    numerator_constants: dict = field(default_factory=dict, compare=False)

    @property
    def so_diagram(self) -> YoungDiagram:
        return vertical_sum(self.lam, self.tau)

    @property
    def sp_diagram(self) -> YoungDiagram:
        return horizontal_sum(self.lam, self.tau)

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "tau": str(self.tau),
            "so_diagram": str(self.so_diagram),
            "sp_diagram": str(self.sp_diagram),
            "X": _multiset(self.X),
            "O_so": _multiset(self.O_so),
            "O_sp": _multiset(self.O_sp),
            "z2_active": self.z2_active,
        }


def build_problem(lam, tau) -> ReconstructionProblem:
    lam = lam if isinstance(lam, YoungDiagram) else YoungDiagram(tuple(lam))
    tau = tau if isinstance(tau, YoungDiagram) else YoungDiagram(tuple(tau))
    if lam.area != tau.area:
        raise AreaMismatch(f"|{lam}| = {lam.area} differs from |{tau}| = {tau.area}")
    specs = {
        "sl": RepSpec.sl(lam, tau),
        "so": RepSpec.so(vertical_sum(lam, tau)),
        "sp": RepSpec.sp(horizontal_sum(lam, tau)),
    }
    forms = {s: rank_interpolate(spec) for s, spec in specs.items()}
    den = {s: tuple(gamma_free_args(p)) for s, p in forms.items()}
    num = {s: tuple(gamma_free_args(p, "numerator")) for s, p in forms.items()}
    return ReconstructionProblem(lam, tau, den["sl"], den["so"], den["sp"], lam != tau,
                                 {s: v for s, v in num.items() if v})


@dataclass(frozen=True)
class ReconstructionSolution:
    pairs: tuple[tuple[Fraction, Fraction], ...]
    y_k: Fraction | None = None

    @property
    def pair_forms(self) -> list[LinearForm]:
        """The universal arguments ``x w_x + y w_y``, one per pair."""
        return [x * W_X + y * W_Y for x, y in self.pairs]

    @property
    def denominator_product(self) -> SinhProduct:
        """``prod sinh((x w_x + y w_y) x/2)`` in canonical form (sign in front)."""
        return SinhProduct.build(self.pair_forms, (), 1, UNIVERSAL)

    @property
    def correction(self) -> SinhProduct:
        if self.y_k is None:
            return SinhProduct.one(UNIVERSAL)
        s = _A + _B
        return SinhProduct.build([s * self.y_k / 2], [s * self.y_k / 4], 1, UNIVERSAL)

    @property
    def universal_factor(self) -> SinhProduct:
        """Z2 correction divided by the product of the paired sines."""
        return self.correction / self.denominator_product

    def to_json(self) -> dict:
        return {
            "pairs": [[format_rational(x), format_rational(y)] for x, y in self.pairs],
            "y_k": None if self.y_k is None else format_rational(self.y_k),
            "universal_denominator": self.denominator_product.to_json(),
            "universal_factor": self.universal_factor.to_json(),
            "limit_polynomial": [a.to_json() for a in limit_polynomial(self).numerator],
        }


def _sub_multisets(pool: list[tuple[Fraction, int]], k: int) -> Iterator[list[Fraction]]:
    """All size-``k`` sub-multisets of ``pool`` (value, count), in sorted order."""
    if k == 0:
        yield []
        return
    if not pool:
        return
    (value, count), rest = pool[0], pool[1:]
    if sum(c for _, c in pool) < k:
        return
    for take in range(min(count, k), -1, -1):
        for tail in _sub_multisets(rest, k - take):
            yield [value] * take + tail


def _sp_arg(x: Fraction, y: Fraction) -> Fraction:
    return abs(3 * x / 2 - y / 2)


def _assignments(xs, ys: Counter, targets: Counter):
    if not xs:
        yield []
        return
    (x, count), rest = xs[0], xs[1:]
    for chosen in _sub_multisets(sorted(ys.items()), count):
        need = Counter(_sp_arg(x, y) for y in chosen)
        if any(targets[t] < c for t, c in need.items()):
            continue
        for tail in _assignments(rest, ys - Counter(chosen), targets - need):
            yield [(x, y) for y in chosen] + tail


def solve(problem: ReconstructionProblem) -> list[ReconstructionSolution]:
    """Every pairing of ``X`` with a candidate ``y`` multiset matching all data.

    Returns a sorted, duplicate-free list; an empty list means no pairing
    exists.  Raises Infeasible for malformed inputs and ProblemTooLarge
    beyond ``MAX_FACTORS`` factors.
    """
    X, O_so, O_sp = problem.X, problem.O_so, problem.O_sp
    raw = {"X": _multiset(X), "O_so": _multiset(O_so), "O_sp": _multiset(O_sp)}
    if len(O_so) > MAX_FACTORS:
        raise ProblemTooLarge(f"{len(O_so)} factors exceed the search bound {MAX_FACTORS}")
    if not len(X) == len(O_so) == len(O_sp):
        raise Infeasible("the three denominator multisets differ in size", raw)
    if problem.numerator_constants:
        raise Infeasible("rank-independent numerator arguments are not supported",
                         {**raw, "numerator": {s: _multiset(v) for s, v in
                                               problem.numerator_constants.items()}})
    if any(v <= 0 for v in X + O_so + O_sp):
        raise Infeasible("arguments must be positive", raw)

    if problem.z2_active:
        candidates = []
        for e in sorted(set(O_so)):
            ys = Counter(O_so)
            ys[e] -= 1
            ys[2 * e] += 1
            candidates.append((2 * e, ys))
    else:
        candidates = [(None, Counter(O_so))]

    xs = sorted(Counter(X).items())
    found = set()
    for y_k, ys in candidates:
        targets = Counter(O_sp)
        if y_k is not None:
            if not targets[y_k / 4]:
                continue
            targets[y_k / 4] -= 1
            targets[y_k / 2] += 1
        for pairs in _assignments(xs, +ys, +targets):
            found.add((tuple(sorted(pairs)), y_k))
    key = lambda s: (s[1] is not None, s[1] or 0, s[0])
    return [ReconstructionSolution(p, y) for p, y in sorted(found, key=key)]


def limit_polynomial(sol: ReconstructionSolution) -> RationalFactorForm:
    """Small-``x`` factor list of the paired sines (up to sign and scale)."""
    return RationalFactorForm.build(sol.pair_forms, (), 1, UNIVERSAL)


def _specialized(sol: ReconstructionSolution, series: str) -> Counter:
    wx, wy = W_VALUES[series]
    args = Counter(abs(x * wx + y * wy) for x, y in sol.pairs)
    if sol.y_k is not None and series != "sl":
        # the correction's numerator cancels one argument and adds half of it
        full = sol.y_k if series == "so" else sol.y_k / 2
        if not args[full]:
            return Counter()
        args[full] -= 1
        args[full / 2] += 1
    return +args


def soundness(sol: ReconstructionSolution, problem: ReconstructionProblem) -> bool:
    """Exact check that the solution reproduces all three observed multisets."""
    observed = {"sl": problem.X, "so": problem.O_so, "sp": problem.O_sp}
    return all(_specialized(sol, s) == Counter(v) for s, v in observed.items())
