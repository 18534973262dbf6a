"""Classical root systems, Weyl-line quantum dimensions and rank interpolation.

Conventions
-----------
``N`` is always the size of the defining representation: ``sl(N)`` is
A_{N-1}, ``so(N)`` is B_n or D_n with ``n = N // 2``, ``sp(N)`` (N even) is
C_n.  Long roots have squared length 2, which puts the adjoint Casimir at
``2t`` with ``t = N, N - 2, N/2 + 1`` for sl, so, sp respectively.  For C_n
that means ``(e_i, e_j) = delta_ij / 2``; the other series use the standard
form.

The quantum dimension of the highest weight ``lam`` is

    prod_{a > 0} sinh((a, lam + rho) x / 2) / sinh((a, rho) x / 2)

and is returned as a canonical :class:`SinhProduct` whose arguments are the
inner products themselves (half-x units).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import FitUnstable, RankTooSmall
from .symbolic import RANK, LinearForm, SinhProduct, classical_limit
from .young import YoungDiagram

__all__ = [
    "RootSystem",
    "RepSpec",
    "root_system",
    "classical_root_system",
    "weyl_vector",
    "highest_weight",
    "dynkin_labels",
    "qdim_at_rank",
    "dimension",
    "rank_interpolate",
    "tensor_realization",
    "SERIES",
]

SERIES = ("sl", "so", "sp")


def _unit(n, i, a=1, j=None, b=0):
    v = [0] * n
    v[i] += a
    if j is not None:
        v[j] += b
    return tuple(v)


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    positive_roots: tuple[tuple[int, ...], ...]
    form_scale: Fraction
    ambient_dim: int
    _sparse: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        sparse = tuple(tuple((k, c) for k, c in enumerate(r) if c) for r in self.positive_roots)
        object.__setattr__(self, "_sparse", sparse)

    def inner(self, u, v) -> Fraction:
        return self.form_scale * sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))

    def pairings(self, weight) -> list[Fraction]:
        """``(a, weight)`` for every positive root ``a``, in root order."""
        s = self.form_scale
        return [s * sum(c * weight[k] for k, c in r) for r in self._sparse]


@lru_cache(maxsize=None)
def root_system(series: str, rank: int) -> RootSystem:
    """Positive roots of A_r, B_r, C_r or D_r in orthogonal coordinates."""
    if rank < 1:
        raise ValueError("rank must be positive")
    if series == "A":
        n = rank + 1
        roots = [_unit(n, i, 1, j, -1) for i in range(n) for j in range(i + 1, n)]
        return RootSystem("A", rank, tuple(roots), Fraction(1), n)
    if series not in ("B", "C", "D"):
        raise ValueError(f"unknown series {series!r}")
    n = rank
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(_unit(n, i, 1, j, -1))
            roots.append(_unit(n, i, 1, j, 1))
        if series == "B":
            roots.append(_unit(n, i))
        elif series == "C":
            roots.append(_unit(n, i, 2))
    scale = Fraction(1, 2) if series == "C" else Fraction(1)
    return RootSystem(series, rank, tuple(roots), scale, n)


def classical_root_system(family: str, N: int) -> RootSystem:
    if family == "sl":
        if N < 2:
            raise RankTooSmall("sl(N) needs N >= 2")
        return root_system("A", N - 1)
    if family == "so":
        if N < 3:
            raise RankTooSmall("so(N) needs N >= 3")
        return root_system("B" if N % 2 else "D", N // 2)
    if family == "sp":
        if N < 2 or N % 2:
            raise RankTooSmall("sp(N) needs a positive even N")
        return root_system("C", N // 2)
    raise ValueError(f"unknown family {family!r}")


def weyl_vector(rs: RootSystem) -> tuple[Fraction, ...]:
    """Half the sum of the positive roots."""
    total = [Fraction(0)] * rs.ambient_dim
    for r in rs.positive_roots:
        for k, c in enumerate(r):
            total[k] += c
    return tuple(t / 2 for t in total)


@dataclass(frozen=True)
class RepSpec:
    """A tensor representation: ``D(lam, tau)`` for sl, one diagram for so/sp."""

    series: str
    lam: YoungDiagram = YoungDiagram()
    tau: YoungDiagram = YoungDiagram()

    def __post_init__(self):
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}")
        for name in ("lam", "tau"):
            d = getattr(self, name)
            if not isinstance(d, YoungDiagram):
                object.__setattr__(self, name, YoungDiagram(tuple(d)))
        if self.series != "sl" and not self.tau.is_empty():
            raise ValueError("so/sp representations take a single diagram")

    @classmethod
    def sl(cls, lam, tau=()) -> "RepSpec":
        return cls("sl", lam, tau)

    @classmethod
    def so(cls, diagram) -> "RepSpec":
        return cls("so", diagram)

    @classmethod
    def sp(cls, diagram) -> "RepSpec":
        return cls("sp", diagram)

    @property
    def diagram(self) -> YoungDiagram:
        return self.lam

    @property
    def z2_symmetric(self) -> bool:
        return self.series != "sl" or self.lam == self.tau

    def swapped(self) -> "RepSpec":
        return RepSpec(self.series, self.tau, self.lam) if self.series == "sl" else self

    def min_rank(self) -> int:
        if self.series == "sl":
            return max(2, self.lam.height + self.tau.height)
        if self.series == "so":
            return max(3, 2 * self.lam.height)
        return max(2, 2 * self.lam.height)

    def admissible(self, N: int) -> bool:
        if self.series == "sp" and N % 2:
            return False
        return N >= self.min_rank()

    def __str__(self):
        if self.series == "sl":
            return f"sl D(({self.lam}),({self.tau}))"
        return f"{self.series} ({self.lam})"


def _check_rank(spec: RepSpec, N: int):
    if not spec.admissible(N):
        raise RankTooSmall(f"{spec} is not realized at N = {N} "
                           f"(needs N >= {spec.min_rank()}"
                           + (", N even)" if spec.series == "sp" else ")"))


def highest_weight(spec: RepSpec, N: int) -> tuple[Fraction, ...]:
    """Highest weight in orthogonal coordinates of the ambient space."""
    _check_rank(spec, N)
    if spec.series == "sl":
        w = [Fraction(0)] * N
        for i, r in enumerate(spec.lam.rows):
            w[i] += r
        for j, r in enumerate(spec.tau.rows):
            w[N - 1 - j] -= r
        return tuple(w)
    n = N // 2
    return tuple(Fraction(r) for r in spec.lam.rows) + (Fraction(0),) * (n - spec.lam.height)


def dynkin_labels(spec: RepSpec, N: int) -> tuple[int, ...]:
    w = highest_weight(spec, N)
    diffs = [int(a - b) for a, b in zip(w, w[1:])]
    if spec.series == "sl":
        return tuple(diffs)
    rs = classical_root_system(spec.series, N)
    last = {"B": 2 * w[-1], "C": w[-1], "D": w[-2] + w[-1] if len(w) > 1 else w[-1]}
    return tuple(diffs) + (int(last[rs.series]),)


def qdim_at_rank(spec: RepSpec, N: int) -> SinhProduct:
    """Weyl-line quantum dimension at a numeric rank, as a constant product."""
    lam = highest_weight(spec, N)
    rs = classical_root_system(spec.series, N)
    rho = weyl_vector(rs)
    shifted = tuple(a + b for a, b in zip(lam, rho))
    num = rs.pairings(shifted)
    den = rs.pairings(rho)
    return SinhProduct.build([LinearForm.constant(v, RANK) for v in num],
                             [LinearForm.constant(v, RANK) for v in den], 1, RANK)


def dimension(spec: RepSpec, N: int, symmetrized: bool = False) -> int:
    """Ordinary dimension; ``symmetrized`` doubles sl composites with lam != tau."""
    d = classical_limit(qdim_at_rank(spec, N))
    if d.denominator != 1:
        raise FitUnstable(f"non-integral dimension {d} for {spec} at N = {N}")
    d = int(d)
    if symmetrized and not spec.z2_symmetric:
        d *= 2
    return d


def tensor_realization(spec: RepSpec, N: int) -> tuple[RepSpec, int] | None:
    """Irreducible content of the tensor representation at rank ``N``.

    Returns ``(spec', m)`` such that the representation labelled by ``spec``
    (an O(N) irrep for so) is ``m`` copies-in-dimension of ``spec'`` under
    the algebra, or None when it does not exist at this rank.  For so, a
    first column ``c > N/2`` is replaced by ``N - c`` (allowed when the first
    two columns sum to at most N), and a diagram of height exactly N/2 splits
    into two irreps of equal quantum dimension.
    """
    if spec.series == "sl":
        return (spec, 1) if spec.admissible(N) else None
    if spec.series == "sp":
        return (spec, 1) if spec.admissible(N) else None
    if N < 3:
        return None
    d = spec.lam
    cols = list(d.columns)
    if cols and cols[0] > N / 2:
        if len(cols) > 1 and cols[0] + cols[1] > N:
            return None
        if cols[0] > N:
            return None
        cols[0] = N - cols[0]
        cols.sort(reverse=True)
        cols = [c for c in cols if c]
        d = YoungDiagram(tuple(cols)).T
        spec = RepSpec.so(d)
    mult = 2 if (N % 2 == 0 and d.height and d.height == N // 2) else 1
    return spec, mult


def _sample_ranks(spec: RepSpec) -> tuple[list[int], list[int]]:
    step = 1 if spec.series == "sl" else 2
    size = spec.lam.height + spec.lam.width + spec.tau.height + spec.tau.width
    base = max(20, 4 * size, spec.min_rank())
    if step == 2 and base % 2:
        base += 1
    ranks = [base + k * step for k in range(6)]
    return ranks[:4], ranks[4:]


@lru_cache(maxsize=256)
def rank_interpolate(spec: RepSpec) -> SinhProduct:
    """Quantum dimension with arguments linear in ``N``.

    Arguments are fitted across consecutive admissible ranks (even N for so
    and sp) by sorting each rank's canonical arguments and pairing them
    positionally, then checked at held-out ranks by exact substitution.

    For so the result describes the O(N) representation: at the one rank
    ``N = 2 * height`` where it splits into two irreducibles it evaluates to
    twice :func:`qdim_at_rank` (see :func:`tensor_realization`).
    """
    fit, held = _sample_ranks(spec)
    samples = {N: qdim_at_rank(spec, N) for N in fit + held}
    shapes = {(len(p.numerator), len(p.denominator), p.prefactor) for p in samples.values()}
    if len(shapes) != 1:
        raise FitUnstable(f"factor counts of {spec} vary across ranks {sorted(samples)}")

    def fit_side(attr):
        columns = [sorted(a.const for a in getattr(samples[N], attr)) for N in fit + held]
        r0, r1 = fit[0], fit[1]
        forms = []
        for values in zip(*columns):
            slope = (values[1] - values[0]) / (r1 - r0)
            intercept = values[0] - slope * r0
            for N, v in zip(fit + held, values):
                if intercept + slope * N != v:
                    raise FitUnstable(f"argument track of {spec} is not linear in N")
            forms.append(LinearForm(RANK, (slope,), intercept))
        return forms

    prefactor = next(iter(shapes))[2]
    result = SinhProduct.build(fit_side("numerator"), fit_side("denominator"), prefactor, RANK)
    for N in held:
        if result.at({"N": N}) != samples[N]:
            raise FitUnstable(f"interpolated form of {spec} fails at held-out N = {N}")
    return result
