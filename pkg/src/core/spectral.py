"""
Exact spectral pipeline for nonnegative integer matrices
Characteristic polynomials, certified dominant roots, primitivity tests
"""
import logging
from dataclasses import dataclass
from decimal import Decimal, ROUND_CEILING, localcontext
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import mpmath
import networkx as nx
import numpy as np
import sympy
from pydantic import BaseModel

from .config import PPGROWTH_DIGITS, PPGROWTH_POWER_ITERATIONS
from .errors import NoRealRoot, NotPrimitive

# Set up logging
logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of Python ints (no overflow)."""
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col) if a) for col in cols)
            for row in self.rows
        ))

    def plus_scalar(self, value: int) -> "IntMatrix":
        """self + value * I"""
        return IntMatrix(tuple(
            tuple(v + value if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(self.rows)
        ))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def power(self, exponent: int) -> "IntMatrix":
        result = IntMatrix.identity(self.dim)
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.rows, dtype=dtype).reshape(self.dim, self.dim)

    def to_json(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.rows]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs) or (0,))

    @classmethod
    def from_descending(cls, coefficients: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(reversed([int(c) for c in coefficients])))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def descending(self) -> List[int]:
        return list(reversed(self.coefficients))

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:] or (0,))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.descending()]

    def to_text(self, var: str = "t") -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                body = ("" if magnitude == 1 else str(magnitude)) + var + (f"^{power}" if power > 1 else "")
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()


class RootApproximation(BaseModel):
    """Certified approximation: the root lies in [lower, upper] and within radius of value"""
    value: Decimal
    radius: Decimal
    lower: Fraction
    upper: Fraction
    digits: int

    class Config:
        arbitrary_types_allowed = True
        json_encoders = {Fraction: str, Decimal: str}

    def __str__(self) -> str:
        return f"{self.value} ± {self.radius:.0e}" if self.radius else f"{self.value} ± 0"


def charpoly(matrix: IntMatrix) -> IntPolynomial:
    """
    Monic characteristic polynomial det(tI - A) by Faddeev-LeVerrier

    Exact in Python ints: every division by k is exact for integer matrices.
    """
    n = matrix.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    product = IntMatrix.zeros(n)
    for k in range(1, n + 1):
        m = product.plus_scalar(coeffs[n - k + 1])
        product = matrix @ m
        t = product.trace()
        if t % k:
            raise ArithmeticError(f"inexact Faddeev-LeVerrier step {k}")
        coeffs[n - k] = -t // k
    poly = IntPolynomial(tuple(coeffs))
    logger.debug(f"Characteristic polynomial of {n}x{n} matrix: {poly}")
    return poly


def bareiss_determinant(matrix: IntMatrix, t: Number) -> Fraction:
    """det(tI - A) by fraction-free elimination (sympy), for cross-checks."""
    n = matrix.dim
    value = sympy.Rational(t.numerator, t.denominator) if isinstance(t, Fraction) else sympy.Integer(t)
    shifted = sympy.Matrix(n, n, lambda i, j: (value if i == j else 0) - matrix.rows[i][j])
    det = shifted.det(method='bareiss')
    det = sympy.Rational(det)
    return Fraction(int(det.p), int(det.q))


def _to_fraction(value: Any) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _horner(coeffs_desc: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs_desc:
        acc = acc * x + c
    return acc


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


class _SturmChain:
    """Sturm sequence of a square-free polynomial, evaluated exactly."""

    def __init__(self, squarefree: "sympy.Poly"):
        self.polys = [[_to_fraction(c) for c in q.all_coeffs()] for q in sympy.sturm(squarefree)]
        self.base = self.polys[0]

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (_sign(_horner(p, x)) for p in self.polys) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in (lo, hi]."""
        return self.variations(lo) - self.variations(hi)

    def value(self, x: Fraction) -> Fraction:
        return _horner(self.base, x)


def _split_point(lo: Fraction, hi: Fraction, chain: _SturmChain) -> Fraction:
    for weight in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 7), Fraction(4, 7)):
        mid = lo + (hi - lo) * weight
        if chain.value(mid) != 0:
            return mid
    return lo + (hi - lo) * Fraction(5, 11)


def _ceil_decimal(value: Fraction) -> Decimal:
    if value == 0:
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = 3
        ctx.rounding = ROUND_CEILING
        return Decimal(value.numerator) / Decimal(value.denominator)


def dominant_root(poly: IntPolynomial, digits: Optional[int] = None) -> RootApproximation:
    """
    Largest real root, isolated by Sturm sequences and refined by bisection

    Brackets are exact rationals; a final Newton polish (mpmath) picks the
    reported value inside the last bracket.

    Args:
        poly: Integer polynomial of degree >= 1
        digits: Requested decimal digits after the point

    Returns:
        RootApproximation with |value - root| <= radius
    """
    digits = PPGROWTH_DIGITS if digits is None else digits
    if poly.degree < 1:
        raise NoRealRoot(f"constant polynomial {poly} has no roots")

    x = sympy.Symbol('x')
    squarefree = sympy.Poly(poly.descending(), x, domain='QQ').sqf_part()
    chain = _SturmChain(squarefree)
    lead = abs(chain.base[0])
    bound = 1 + max((abs(c) / lead for c in chain.base[1:]), default=Fraction(0))
    lo, hi = -bound, bound

    if chain.count(lo, hi) == 0:
        raise NoRealRoot(f"{poly} has no real root")

    # isolate the largest root in (lo, hi]
    while chain.count(lo, hi) > 1:
        mid = _split_point(lo, hi, chain)
        if chain.count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid

    # refine by sign changes of the square-free part
    width = Fraction(1, 10 ** (digits + 2))
    lo_sign = _sign(chain.value(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        mid_sign = _sign(chain.value(mid))
        if mid_sign == 0:
            lo = hi = mid
            break
        if mid_sign == lo_sign:
            lo = mid
        else:
            hi = mid

    with mpmath.workdps(digits + 10):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in chain.base]
        guess = mpmath.mpf(((lo + hi) / 2).numerator) / ((lo + hi) / 2).denominator
        for _ in range(8):
            fx, dfx = mpmath.polyval(coeffs, guess, derivative=True)
            if dfx == 0:
                break
            guess = guess - fx / dfx
        value = Decimal(mpmath.nstr(guess, digits + 6, strip_zeros=False))

    exact = Fraction(value)
    if not lo <= exact <= hi:
        midpoint = (lo + hi) / 2
        with localcontext() as ctx:
            ctx.prec = digits + 20
            value = Decimal(midpoint.numerator) / Decimal(midpoint.denominator)
        exact = Fraction(value)
    radius = _ceil_decimal(max(abs(exact - lo), abs(exact - hi)))

    logger.debug(f"Dominant root of {poly}: {value} (bracket width {float(hi - lo):.2e})")
    return RootApproximation(value=value, radius=radius, lower=lo, upper=hi, digits=digits)


def support_graph(matrix: IntMatrix) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(matrix.dim))
    graph.add_edges_from(
        (i, j) for i, row in enumerate(matrix.rows) for j, v in enumerate(row) if v
    )
    return graph


def graph_period(graph: nx.DiGraph) -> int:
    """gcd of cycle lengths of a strongly connected digraph (0 without cycles)."""
    nodes = list(graph.nodes)
    if not nodes:
        return 0
    level = nx.single_source_shortest_path_length(graph, nodes[0])
    period = 0
    for u, v in graph.edges:
        if u in level and v in level:
            period = gcd(period, level[u] + 1 - level[v])
    return abs(period)


def _boolean_power(support: np.ndarray, exponent: int) -> np.ndarray:
    result = np.eye(support.shape[0], dtype=bool)
    base = support.copy()
    while exponent > 0:
        if exponent & 1:
            result = (result.astype(np.int64) @ base.astype(np.int64)) > 0
        exponent >>= 1
        if exponent:
            base = (base.astype(np.int64) @ base.astype(np.int64)) > 0
    return result


def primitivity(matrix: IntMatrix) -> Tuple[bool, Optional[Dict[str, Any]]]:
    """
    Primitivity of a nonnegative matrix (Wielandt exponent test)

    Returns:
        (True, None) or (False, witness) where the witness is either an
        unreachable ordered pair or the period of the strongly connected graph
    """
    n = matrix.dim
    if n == 0:
        return False, {"kind": "empty"}
    graph = support_graph(matrix)
    for u in range(n):
        reach = set()
        for s in graph.successors(u):
            reach.add(s)
            reach |= nx.descendants(graph, s)
        missing = [v for v in range(n) if v not in reach]
        if missing:
            return False, {"kind": "unreachable", "source": u, "target": missing[0]}

    support = matrix.to_numpy(dtype=np.int64) > 0
    if _boolean_power(support, (n - 1) ** 2 + 1).all():
        return True, None
    return False, {"kind": "period", "period": graph_period(graph)}


def periodic_components(matrix: IntMatrix) -> List[Tuple[List[int], int]]:
    """Strongly connected components with at least one cycle and period > 1."""
    graph = support_graph(matrix)
    found = []
    for component in nx.strongly_connected_components(graph):
        sub = graph.subgraph(component)
        if sub.number_of_edges() == 0:
            continue
        period = graph_period(sub)
        if period > 1:
            found.append((sorted(component), period))
    return found


def power_iteration_estimate(matrix: IntMatrix, iterations: Optional[int] = None, tol: float = 1e-13) -> Decimal:
    """
    Spectral radius by floating-point power iteration (numpy)

    Cross-check only; the exact value comes from dominant_root(). The Decimal
    carries the shortest repr of the float estimate.
    """
    if any(v < 0 for row in matrix.rows for v in row):
        raise NotPrimitive("power iteration needs a nonnegative matrix")
    periodic = periodic_components(matrix)
    if periodic:
        nodes, period = periodic[0]
        raise NotPrimitive(f"component {nodes} has period {period}")

    iterations = PPGROWTH_POWER_ITERATIONS if iterations is None else iterations
    a = matrix.to_numpy(dtype=float)
    x = np.ones(matrix.dim) / max(matrix.dim, 1)
    estimate = 0.0
    for _ in range(iterations):
        y = a @ x
        total = float(y.sum())
        if total == 0.0:
            return Decimal(0)
        previous, estimate = estimate, total / float(x.sum())
        x = y / total
        if abs(estimate - previous) <= tol * max(estimate, 1.0):
            break
    return Decimal(repr(float(estimate)))
