"""Exact linear forms, canonical sinh products and factored rational functions.

Every sinh argument ``u`` is stored in half-x units: the factor it denotes is
``sinh(u * x / 2)``.  Arguments are :class:`LinearForm` objects over one of
two fixed variable lists, :data:`RANK` (``N``) or :data:`UNIVERSAL`
(``alpha, beta, gamma``).

Vanishing arguments are handled by the zero-pair rule: at a point where
several arguments vanish, they are grouped by proportionality class of the
full affine form, and a numerator/denominator pair in one class contributes
the ratio of their multipliers (``sinh(c1*e)/sinh(c2*e) -> c1/c2``).  When
classes do not balance but the total counts do, the limit depends on the
direction of approach and a ``direction`` must be supplied.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

from .errors import (
    Divergent,
    Indeterminate,
    PoleAtPoint,
    VariableMismatch,
    ZeroPrefactor,
)

__all__ = [
    "RANK",
    "UNIVERSAL",
    "LinearForm",
    "SinhProduct",
    "RationalFactorForm",
    "as_rational",
    "format_rational",
    "canonicalize",
    "multiply",
    "evaluate",
    "classical_limit",
    "evaluate_rational",
]

RANK = ("N",)
UNIVERSAL = ("alpha", "beta", "gamma")

# Leading-coefficient order used for the sign convention.
_SIGN_ORDER = {
    RANK: ("N",),
    UNIVERSAL: ("gamma", "beta", "alpha"),
}

_LATEX_NAMES = {"alpha": r"\alpha", "beta": r"\beta", "gamma": r"\gamma", "N": "N"}

Number = Union[int, Fraction, str]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (no floats)."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational: {value!r}") from None
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _sign_order(variables):
    return _SIGN_ORDER.get(tuple(variables), tuple(variables))


@dataclass(frozen=True)
class LinearForm:
    """``const + sum(coeffs[i] * variables[i])`` with rational coefficients."""

    variables: tuple[str, ...]
    coeffs: tuple[Fraction, ...]
    const: Fraction = Fraction(0)

    def __post_init__(self):
        variables = tuple(self.variables)
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != len(variables):
            raise ValueError("one coefficient per variable is required")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "const", as_rational(self.const))

    # construction -------------------------------------------------------

    @classmethod
    def from_mapping(cls, variables, mapping: Mapping[str, Number] | None = None,
                     const: Number = 0) -> "LinearForm":
        mapping = dict(mapping or {})
        unknown = set(mapping) - set(variables)
        if unknown:
            raise VariableMismatch(f"symbols {sorted(unknown)} not in {tuple(variables)}")
        return cls(tuple(variables), tuple(mapping.get(v, 0) for v in variables), const)

    @classmethod
    def constant(cls, value: Number, variables=RANK) -> "LinearForm":
        return cls.from_mapping(variables, {}, value)

    @classmethod
    def symbol(cls, name: str, variables) -> "LinearForm":
        return cls.from_mapping(variables, {name: 1})

    # inspection ---------------------------------------------------------

    def coefficient(self, name: str) -> Fraction:
        return self.coeffs[self.variables.index(name)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.variables, self.coeffs))

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and not any(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def sort_key(self) -> tuple:
        d = self.as_dict()
        return tuple(d[v] for v in _sign_order(self.variables)) + (self.const,)

    def leading_coefficient(self) -> Fraction:
        for c in self.sort_key():
            if c:
                return c
        return Fraction(0)

    def leading_sign(self) -> int:
        c = self.leading_coefficient()
        return (c > 0) - (c < 0)

    def normalized(self) -> tuple[Fraction, "LinearForm"]:
        """Split as ``scale * unit`` with the unit's leading coefficient 1."""
        lead = self.leading_coefficient()
        if lead == 0:
            raise ValueError("the zero form has no proportionality class")
        return lead, self / lead

    def ratio_to(self, other: "LinearForm") -> Fraction | None:
        """``r`` with ``self == r * other``, or None if not proportional."""
        if other.is_zero:
            return None
        if self.is_zero:
            return Fraction(0)
        s1, u1 = self.normalized()
        s2, u2 = other.normalized()
        return s1 / s2 if u1 == u2 else None

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "LinearForm"):
        if self.variables != other.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, LinearForm):
            self._check(other)
            return LinearForm(self.variables,
                              tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                              self.const + other.const)
        return LinearForm(self.variables, self.coeffs, self.const + as_rational(other))

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(self.variables, tuple(-c for c in self.coeffs), -self.const)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        k = as_rational(k)
        return LinearForm(self.variables, tuple(k * c for c in self.coeffs), k * self.const)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / as_rational(k))

    # evaluation and substitution ----------------------------------------

    def evaluate(self, assignment: Mapping[str, Number] | None = None) -> Fraction:
        assignment = assignment or {}
        total = self.const
        for v, c in zip(self.variables, self.coeffs):
            if c:
                if v not in assignment:
                    raise KeyError(f"no value for symbol {v!r}")
                total += c * as_rational(assignment[v])
        return total

    def linear_part_at(self, direction: Mapping[str, Number]) -> Fraction:
        return sum((c * as_rational(direction.get(v, 0))
                    for v, c in zip(self.variables, self.coeffs)), Fraction(0))

    def substitute(self, mapping: Mapping[str, "LinearForm | Number"],
                   variables) -> "LinearForm":
        """Replace every symbol by a form over ``variables`` (or a number)."""
        variables = tuple(variables)
        out = LinearForm.constant(self.const, variables)
        for v, c in zip(self.variables, self.coeffs):
            if not c:
                continue
            if v not in mapping:
                raise KeyError(f"no substitution for symbol {v!r}")
            image = mapping[v]
            if not isinstance(image, LinearForm):
                image = LinearForm.constant(image, variables)
            out = out + c * image
        return out

    def rename(self, mapping: Mapping[str, str]) -> "LinearForm":
        """Permute symbol names within the same variable list."""
        d = self.as_dict()
        return LinearForm.from_mapping(
            self.variables, {mapping.get(v, v): c for v, c in d.items()}, self.const)

    # output -------------------------------------------------------------

    def to_json(self) -> dict:
        out = {"const": format_rational(self.const)}
        for v, c in zip(self.variables, self.coeffs):
            out[v] = format_rational(c)
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LinearForm":
        keys = set(data) - {"const"}
        if keys <= set(RANK):
            variables = RANK
        elif keys <= set(UNIVERSAL):
            variables = UNIVERSAL
        else:
            raise VariableMismatch(f"unknown symbol keys {sorted(keys)}")
        return cls.from_mapping(variables, {k: as_rational(data[k]) for k in keys},
                                as_rational(data.get("const", "0/1")))

    def _integral_terms(self, scale: Fraction, names) -> tuple[list[tuple[int, str]], int]:
        """Terms of ``scale*self`` over a common denominator, in sign order."""
        d = self.as_dict()
        parts = [(scale * d[v], names[v]) for v in _sign_order(self.variables)]
        parts.append((scale * self.const, ""))
        parts = [(c, n) for c, n in parts if c]
        den = reduce(_lcm, (c.denominator for c, _ in parts), 1)
        return [(int(c * den), n) for c, n in parts], den

    @staticmethod
    def _join(terms, mul="*") -> str:
        out = ""
        for k, name in terms:
            mag = abs(k)
            if name:
                body = name if mag == 1 else f"{mag}{mul}{name}"
            else:
                body = str(mag)
            if not out:
                out = ("-" if k < 0 else "") + body
            else:
                out += (" - " if k < 0 else " + ") + body
        return out or "0"

    def __str__(self):
        terms, den = self._integral_terms(Fraction(1), {v: v for v in self.variables})
        body = self._join(terms)
        if den == 1:
            return body
        if len(terms) > 1:
            body = f"({body})"
        return f"{body}/{den}"

    def latex_argument(self) -> str:
        """LaTeX for ``self * x / 2``, e.g. ``\\frac{(\\beta - \\alpha) x}{4}``."""
        terms, den = self._integral_terms(Fraction(1, 2), _LATEX_NAMES)
        body = self._join(terms, mul="")
        if len(terms) > 1:
            body = f"({body}) x"
        elif body in ("1", "-1"):
            body = "x" if body == "1" else "-x"
        else:
            body = f"{body} x"
        return body if den == 1 else rf"\frac{{{body}}}{{{den}}}"


def _coerce_arg(a, variables) -> LinearForm:
    if isinstance(a, LinearForm):
        if a.variables != tuple(variables):
            raise VariableMismatch(f"{a.variables} vs {tuple(variables)}")
        return a
    return LinearForm.constant(a, variables)


def _infer_variables(args, default=RANK):
    for a in args:
        if isinstance(a, LinearForm):
            return a.variables
    return default


def _zero_pairs(num_zero: list[LinearForm], den_zero: list[LinearForm],
                direction: Mapping[str, Number] | None) -> tuple[Fraction, int]:
    """Resolve vanishing arguments given as their pre-substitution forms.

    Returns ``(ratio, excess)`` where ``excess = #num - #den`` vanishing
    arguments.  ``ratio`` is the finite limit of the vanishing sub-product
    and is only meaningful when ``excess == 0``.
    """
    null_num = sum(1 for a in num_zero if a.is_zero)
    null_den = sum(1 for a in den_zero if a.is_zero)
    excess = len(num_zero) - len(den_zero)
    if null_den or excess < 0:
        raise Divergent(f"{len(den_zero)} vanishing denominator factors "
                        f"against {len(num_zero)} in the numerator")
    if excess > 0:
        return Fraction(0), excess
    if null_num:
        raise Indeterminate("an identically vanishing numerator factor meets a pole")

    classes: dict[LinearForm, list[list[Fraction]]] = defaultdict(lambda: [[], []])
    for side, forms in ((0, num_zero), (1, den_zero)):
        for a in forms:
            scale, unit = a.normalized()
            classes[unit][side].append(scale)
    ratio = Fraction(1)
    stationary = 0
    for unit, (ns, ds) in classes.items():
        for s in ns:
            ratio *= s
        for s in ds:
            ratio /= s
        e = len(ns) - len(ds)
        if e:
            if direction is None:
                raise Indeterminate(f"unbalanced vanishing class {unit}; "
                                    "a degeneration direction is required")
            v = unit.linear_part_at(direction)
            if v == 0:
                # the class stays at zero along the whole path
                if e < 0:
                    raise Divergent(f"{unit} vanishes identically along the direction")
                stationary += e
            else:
                ratio *= v ** e
    if stationary:
        return Fraction(0), stationary
    return ratio, 0


def _log_abs_sinh(z: float) -> float:
    az = abs(z)
    if az < 20.0:
        return math.log(math.sinh(az))
    return az - math.log(2.0) + math.log1p(-math.exp(-2.0 * az))


@dataclass(frozen=True)
class SinhProduct:
    """``prefactor * prod sinh(a*x/2) / prod sinh(b*x/2)``.

    The raw constructor stores its arguments as given; :meth:`build` and
    every arithmetic operation return the canonical form (positive leading
    coefficients, sorted, fully cancelled).
    """

    variables: tuple[str, ...]
    prefactor: Fraction
    numerator: tuple[LinearForm, ...] = ()
    denominator: tuple[LinearForm, ...] = ()

    unit = "x/2"

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "prefactor", as_rational(self.prefactor))
        object.__setattr__(self, "numerator",
                           tuple(_coerce_arg(a, variables) for a in self.numerator))
        object.__setattr__(self, "denominator",
                           tuple(_coerce_arg(a, variables) for a in self.denominator))

    @classmethod
    def build(cls, numerator: Iterable = (), denominator: Iterable = (),
              prefactor: Number = 1, variables=None) -> "SinhProduct":
        numerator, denominator = list(numerator), list(denominator)
        if variables is None:
            variables = _infer_variables(numerator + denominator)
        return canonicalize(cls(tuple(variables), prefactor, tuple(numerator),
                                tuple(denominator)))

    @classmethod
    def one(cls, variables=RANK) -> "SinhProduct":
        return cls(tuple(variables), Fraction(1))

    # algebra ------------------------------------------------------------

    def canonical(self) -> "SinhProduct":
        return canonicalize(self)

    def __mul__(self, other):
        if isinstance(other, SinhProduct):
            return multiply(self, other)
        return canonicalize(SinhProduct(self.variables, self.prefactor * as_rational(other),
                                        self.numerator, self.denominator))

    __rmul__ = __mul__

    def reciprocal(self) -> "SinhProduct":
        return canonicalize(SinhProduct(self.variables, 1 / self.prefactor,
                                        self.denominator, self.numerator))

    def __truediv__(self, other):
        if isinstance(other, SinhProduct):
            return multiply(self, other.reciprocal())
        return self * (1 / as_rational(other))

    def rename(self, mapping: Mapping[str, str]) -> "SinhProduct":
        return SinhProduct.build([a.rename(mapping) for a in self.numerator],
                                 [a.rename(mapping) for a in self.denominator],
                                 self.prefactor, self.variables)

    def substitute(self, mapping: Mapping[str, "LinearForm | Number"], variables=None,
                   direction: Mapping[str, Number] | None = None) -> "SinhProduct":
        """Substitute symbols, resolving arguments that vanish identically.

        Vanishing pairs are cancelled by the zero-pair rule, judged on the
        forms before substitution.  Surplus vanishing numerator factors are
        kept as zero forms (the product is then identically zero).
        """
        variables = self.variables if variables is None else tuple(variables)
        num_keep, den_keep, num_zero, den_zero = [], [], [], []
        for src, keep, zero in ((self.numerator, num_keep, num_zero),
                                (self.denominator, den_keep, den_zero)):
            for a in src:
                image = a.substitute(mapping, variables)
                (zero if image.is_zero else keep).append(image if not image.is_zero else a)
        ratio, excess = _zero_pairs(num_zero, den_zero, direction)
        if excess:
            num_keep += [LinearForm.constant(0, variables)] * excess
            ratio = Fraction(1)
        return SinhProduct.build(num_keep, den_keep, self.prefactor * ratio, variables)

    def at(self, assignment: Mapping[str, Number],
           direction: Mapping[str, Number] | None = None) -> "SinhProduct":
        """Numeric specialization, keeping the same variable list."""
        return self.substitute({k: as_rational(v) for k, v in assignment.items()},
                               self.variables, direction)

    def evaluate(self, assignment=None, x: float = 1.0, direction=None) -> float:
        return evaluate(self, assignment, x, direction)

    def classical_limit(self, assignment=None, direction=None) -> Fraction:
        return classical_limit(self, assignment, direction)

    # inspection ---------------------------------------------------------

    @property
    def is_constant_only(self) -> bool:
        return all(a.is_constant for a in self.numerator + self.denominator)

    def constant_args(self, side: str = "denominator") -> list[Fraction]:
        forms = self.numerator if side == "numerator" else self.denominator
        return sorted(a.const for a in forms if a.is_constant)

    def __str__(self):
        def side(forms):
            counts = Counter(forms)
            parts = []
            for a in sorted(counts, key=LinearForm.sort_key):
                arg = str(a)
                if arg == "1":
                    term = "sinh(x/2)"
                else:
                    if not (arg.isalnum() or arg.lstrip("-").isalnum()):
                        arg = f"({arg})"
                    term = f"sinh(x/2*{arg})"
                if counts[a] > 1:
                    term += f"^{counts[a]}"
                parts.append(term)
            return " ".join(parts)

        head = str(self.prefactor)
        num = side(self.numerator)
        den = side(self.denominator)
        out = head if not num else (num if self.prefactor == 1 else f"{head} * {num}")
        if den:
            out += f" / ({den})"
        return out

    def latex(self) -> str:
        def side(forms):
            counts = Counter(forms)
            parts = []
            for a in sorted(counts, key=LinearForm.sort_key):
                term = rf"\sinh\left({a.latex_argument()}\right)"
                if counts[a] > 1:
                    term += f"^{{{counts[a]}}}"
                parts.append(term)
            return " ".join(parts)

        p = self.prefactor
        if p == 1:
            head = ""
        elif p == -1:
            head = "-"
        elif p.denominator == 1:
            head = f"{p.numerator} "
        else:
            head = (r"-" if p < 0 else "") + rf"\frac{{{abs(p.numerator)}}}{{{p.denominator}}} "
        num, den = side(self.numerator), side(self.denominator)
        if den:
            return head + rf"\frac{{{num or '1'}}}{{{den}}}"
        if num:
            return head + num
        return (head + "1") if head in ("", "-") else head.strip()

    def to_json(self) -> dict:
        return {
            "unit": self.unit,
            "variables": list(self.variables),
            "prefactor": format_rational(self.prefactor),
            "numerator": [a.to_json() for a in self.numerator],
            "denominator": [a.to_json() for a in self.denominator],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SinhProduct":
        if data.get("unit", "x/2") != "x/2":
            raise ValueError(f"unsupported unit {data.get('unit')!r}")
        num = [LinearForm.from_json(a) for a in data.get("numerator", [])]
        den = [LinearForm.from_json(a) for a in data.get("denominator", [])]
        variables = data.get("variables") or _infer_variables(num + den)
        return cls.build(num, den, as_rational(data["prefactor"]), variables)


def canonicalize(p: SinhProduct) -> SinhProduct:
    """Positive leading coefficients, exact cancellation, sorted multisets."""
    if p.prefactor == 0:
        raise ZeroPrefactor("a sinh product needs a nonzero prefactor")
    sign = 1
    counts = []
    for forms in (p.numerator, p.denominator):
        c = Counter()
        for a in forms:
            if a.leading_sign() < 0:
                a = -a
                sign = -sign
            c[a] += 1
        counts.append(c)
    num, den = counts
    common = Counter({a: k for a, k in (num & den).items() if not a.is_zero})
    num, den = num - common, den - common
    return SinhProduct(p.variables, sign * p.prefactor,
                       tuple(sorted(num.elements(), key=LinearForm.sort_key)),
                       tuple(sorted(den.elements(), key=LinearForm.sort_key)))


def multiply(a: SinhProduct, b: SinhProduct) -> SinhProduct:
    if a.variables != b.variables:
        raise VariableMismatch(f"cannot multiply over {a.variables} and {b.variables}")
    return canonicalize(SinhProduct(a.variables, a.prefactor * b.prefactor,
                                    a.numerator + b.numerator,
                                    a.denominator + b.denominator))


def _split(p: SinhProduct, assignment):
    """Values of all arguments, separated into nonzero values and vanishing forms."""
    out = []
    for forms in (p.numerator, p.denominator):
        values, zeros = [], []
        for a in forms:
            v = a.evaluate(assignment)
            (values.append(v) if v != 0 else zeros.append(a))
        out.append((values, zeros))
    return out


def evaluate(p: SinhProduct, assignment: Mapping[str, Number] | None = None,
             x: float = 1.0, direction: Mapping[str, Number] | None = None) -> float:
    """Float value of ``p`` at ``assignment`` and nonzero ``x``.

    Raises :class:`Divergent` at poles; returns 0.0 when vanishing numerator
    factors outnumber vanishing denominator ones.
    """
    x = float(x)
    if x == 0.0:
        raise ValueError("x must be nonzero; use classical_limit for x -> 0")
    (nvals, nzero), (dvals, dzero) = _split(p, assignment)
    ratio, excess = _zero_pairs(nzero, dzero, direction)
    if excess:
        return 0.0
    log_abs = 0.0
    negative = False
    for values, sgn in ((nvals, 1.0), (dvals, -1.0)):
        for v in values:
            z = float(v) * x / 2.0
            log_abs += sgn * _log_abs_sinh(z)
            negative ^= z < 0
    scale = p.prefactor * ratio
    value = float(scale) * math.exp(log_abs)
    return -value if negative else value


def classical_limit(p: SinhProduct, assignment: Mapping[str, Number] | None = None,
                    direction: Mapping[str, Number] | None = None) -> Fraction:
    """Exact ``x -> 0`` limit: ``prefactor * prod(num values) / prod(den values)``."""
    (nvals, nzero), (dvals, dzero) = _split(p, assignment)
    ratio, excess = _zero_pairs(nzero, dzero, direction)
    if excess:
        return Fraction(0)
    if len(nvals) > len(dvals):
        return Fraction(0)
    if len(nvals) < len(dvals):
        raise Divergent("more denominator than numerator factors as x -> 0")
    value = p.prefactor * ratio
    for v in nvals:
        value *= v
    for v in dvals:
        value /= v
    return value


def _primitive(a: LinearForm) -> tuple[Fraction, LinearForm]:
    """``a = scale * prim`` with coprime integer coefficients, positive lead."""
    entries = [c for c in a.coeffs + (a.const,) if c]
    den = reduce(_lcm, (c.denominator for c in entries), 1)
    num = reduce(math.gcd, (int(c * den) for c in entries), 0)
    scale = Fraction(num, den)
    if a.leading_sign() < 0:
        scale = -scale
    return scale, a / scale


@dataclass(frozen=True)
class RationalFactorForm:
    """``prefactor * prod(numerator factors) / prod(denominator factors)``.

    Canonical factors have coprime integer coefficients and a positive leading
    coefficient, so proportional factors cancel.
    """

    variables: tuple[str, ...]
    prefactor: Fraction
    numerator: tuple[LinearForm, ...] = ()
    denominator: tuple[LinearForm, ...] = ()

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "prefactor", as_rational(self.prefactor))
        object.__setattr__(self, "numerator",
                           tuple(_coerce_arg(a, variables) for a in self.numerator))
        object.__setattr__(self, "denominator",
                           tuple(_coerce_arg(a, variables) for a in self.denominator))

    @classmethod
    def build(cls, numerator: Iterable = (), denominator: Iterable = (),
              prefactor: Number = 1, variables=None) -> "RationalFactorForm":
        numerator, denominator = list(numerator), list(denominator)
        if variables is None:
            variables = _infer_variables(numerator + denominator)
        variables = tuple(variables)
        numerator = [_coerce_arg(a, variables) for a in numerator]
        denominator = [_coerce_arg(a, variables) for a in denominator]
        prefactor = as_rational(prefactor)
        if any(a.is_zero for a in denominator):
            raise PoleAtPoint("identically vanishing denominator factor")
        if prefactor == 0 or any(a.is_zero for a in numerator):
            return cls(variables, Fraction(0))
        num, den = Counter(), Counter()
        for a in numerator:
            s, prim = _primitive(a)
            prefactor *= s
            num[prim] += 1
        for a in denominator:
            s, prim = _primitive(a)
            prefactor /= s
            den[prim] += 1
        common = num & den
        num, den = num - common, den - common
        return cls(variables, prefactor,
                   tuple(sorted(num.elements(), key=LinearForm.sort_key)),
                   tuple(sorted(den.elements(), key=LinearForm.sort_key)))

    def canonical(self) -> "RationalFactorForm":
        return RationalFactorForm.build(self.numerator, self.denominator, self.prefactor,
                                        self.variables)

    def substitute(self, mapping, variables=None) -> "RationalFactorForm":
        variables = self.variables if variables is None else tuple(variables)
        return RationalFactorForm.build([a.substitute(mapping, variables) for a in self.numerator],
                                        [a.substitute(mapping, variables) for a in self.denominator],
                                        self.prefactor, variables)

    def rename(self, mapping: Mapping[str, str]) -> "RationalFactorForm":
        return RationalFactorForm.build([a.rename(mapping) for a in self.numerator],
                                        [a.rename(mapping) for a in self.denominator],
                                        self.prefactor, self.variables)

    def evaluate(self, assignment=None, direction=None) -> Fraction:
        return evaluate_rational(self, assignment, direction)

    def __str__(self):
        def side(forms):
            counts = Counter(forms)
            return " ".join(f"({a})" + (f"^{counts[a]}" if counts[a] > 1 else "")
                            for a in sorted(counts, key=LinearForm.sort_key))

        out = str(self.prefactor)
        if self.numerator:
            out += " * " + side(self.numerator)
        if self.denominator:
            out += " / (" + side(self.denominator) + ")"
        return out

    def to_json(self) -> dict:
        return {
            "prefactor": format_rational(self.prefactor),
            "numerator": [a.to_json() for a in self.numerator],
            "denominator": [a.to_json() for a in self.denominator],
        }


def evaluate_rational(f: RationalFactorForm,
                      assignment: Mapping[str, Number] | None = None,
                      direction: Mapping[str, Number] | None = None) -> Fraction:
    """Exact value at a point.

    Without ``direction`` a vanishing denominator factor raises PoleAtPoint.
    With it, vanishing factors are paired exactly as for sinh products, which
    gives the limit along the line through the point with that tangent.
    """
    value = f.prefactor
    if value == 0:
        return Fraction(0)
    num_zero, den_zero = [], []
    for a in f.denominator:
        v = a.evaluate(assignment)
        if v == 0:
            den_zero.append(a)
        else:
            value /= v
    for a in f.numerator:
        v = a.evaluate(assignment)
        if v == 0:
            num_zero.append(a)
        else:
            value *= v
    if not den_zero:
        return Fraction(0) if num_zero else value
    if direction is None:
        raise PoleAtPoint(f"denominator factor {den_zero[0]} vanishes")
    try:
        ratio, excess = _zero_pairs(num_zero, den_zero, direction)
    except Divergent as exc:
        raise PoleAtPoint(str(exc)) from None
    return Fraction(0) if excess else value * ratio
