"""Truncated power series in ``t`` and the fish generating functions.

``H(t; u, q, y)`` counts extended fish by size, jaw, area and triangles;
``V`` is the kernel-method parametrization and ``A`` the total-area series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .errors import NonIntegralCoefficient
from .polys import ONE, U, Y, MultiPoly, dense_mul_rational

RHO = Fraction(27, 256)


def _is_number(c) -> bool:
    return isinstance(c, (int, Fraction))


def _unit_inverse(c):
    if isinstance(c, MultiPoly):
        k = c.constant_term()
        if not c.is_constant() or k not in (1, -1):
            raise ZeroDivisionError(f"{c} is not a unit")
        return MultiPoly.const(k)
    if c == 0:
        raise ZeroDivisionError("constant term is zero")
    return c if c in (1, -1) else Fraction(1) / c


class TruncatedSeries:
    """Coefficients of ``t^0 .. t^order``; products truncate at the smaller order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = list(coeffs)

    @classmethod
    def zero(cls, order: int, one=1) -> TruncatedSeries:
        return cls([one * 0] * (order + 1))

    @classmethod
    def t(cls, order: int) -> TruncatedSeries:
        return cls([0, 1] + [0] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        return f"TruncatedSeries([{shown}{', ...' if len(self) > 6 else ''}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[:order + 1])

    def map(self, fn: Callable) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs])

    def subs(self, **values) -> TruncatedSeries:
        return self.map(lambda c: c.subs(**values) if isinstance(c, MultiPoly) else c)

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other] + [0] * self.order)

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs[:n + 1], other.coeffs[:n + 1]
        if all(_is_number(c) for c in a) and all(_is_number(c) for c in b):
            return TruncatedSeries(dense_mul_rational(a, b)[:n + 1])
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                if a[i] != 0 and b[k - i] != 0:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        out = self._coerce(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift_down(self, k: int = 1) -> TruncatedSeries:
        """Divide by ``t^k``; the lowest ``k`` coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ZeroDivisionError(f"series not divisible by t^{k}")
        return TruncatedSeries(self.coeffs[k:])

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse by Newton iteration ``x <- x (2 - a x)``."""
        x = TruncatedSeries([_unit_inverse(self.coeffs[0])])
        prec = 1
        while prec < len(self):
            prec = min(2 * prec, len(self))
            x = TruncatedSeries(x.coeffs + [0] * (prec - len(x)))
            a = self.truncate(prec - 1)
            x = x * (2 - a * x)
        return x

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self.map(lambda c: Fraction(c) / other if _is_number(c) else c * _unit_inverse(other))

    def sqrt(self) -> TruncatedSeries:
        """Square root of a series with constant term 1 (exact rationals)."""
        if self.coeffs[0] != 1:
            raise ValueError("series square root needs constant term 1")
        x = TruncatedSeries([1])
        prec = 1
        half = Fraction(1, 2)
        while prec < len(self):
            prec = min(2 * prec, len(self))
            x = TruncatedSeries(x.coeffs + [0] * (prec - len(x)))
            x = (x + self.truncate(prec - 1) * x.inverse()) * half
        return x

    def as_integers(self) -> TruncatedSeries:
        out = []
        for k, c in enumerate(self.coeffs):
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise NonIntegralCoefficient(f"[t^{k}] = {c}")
                c = c.numerator
            out.append(c)
        return TruncatedSeries(out)


# -- master equation -------------------------------------------------------

def solve_master(order: int, q: int | None = None, y: int | None = None) -> TruncatedSeries:
    """Solve the catalytic equation for ``H(t; u, q, y)`` up to ``t^order``.

    ``H = t u q (1 + H) + t u q (H(1,q) - H(uq,q)) / (1 - uq) (1 + H)
          + t u q y H(uq,q) (1 + H)``

    Each pass fixes one more coefficient of ``t``: the right-hand side at
    ``t^n`` only involves ``H`` at lower powers.  ``q`` and ``y`` may be fixed
    to integers up front; ``u`` is catalytic and stays symbolic.  The divided
    difference is an exact polynomial division.
    """
    if order < 1:
        raise ValueError("order must be at least 1")

    if q is None:
        uq = MultiPoly.monomial(1, 1)

        def at_uq(p):
            return p.map_exponents(lambda e: (e[0], e[1] + e[0], e[2]))

        def divided(p):
            return p.divide_one_minus((1, 1, 0))
    else:
        uq = U * q

        def at_uq(p):
            return MultiPoly({e: c * q ** e[0] for e, c in p.terms.items()})

        def divided(p):
            return p.divide_one_minus((1, 0, 0), q)

    ymul = Y if y is None else y
    zero = MultiPoly()
    h = [zero]
    g = [ONE]          # 1 + divided difference + y H(uq, q)
    k = [ONE]          # 1 + H
    for n in range(1, order + 1):
        acc = zero
        for a in range(n):
            if g[a] and k[n - 1 - a]:
                acc = acc + g[a] * k[n - 1 - a]
        hn = uq * acc
        h.append(hn)
        k.append(hn)
        shifted = at_uq(hn)
        at_one = hn.map_exponents(lambda e: (0, e[1], e[2]))
        g.append(divided(at_one - shifted) + shifted * ymul)
    return TruncatedSeries(h)


def master_residual(h: TruncatedSeries) -> TruncatedSeries:
    """Right-hand side minus left-hand side of the master equation for a
    fully symbolic ``H``, with the division cleared: ``(1 - uq) (RHS - H)``."""
    order = h.order
    uq = MultiPoly.monomial(1, 1)
    one_minus = ONE - uq
    t = TruncatedSeries.t(order)
    at_one = h.map(lambda p: p.map_exponents(lambda e: (0, e[1], e[2])) if p else p)
    at_uq = h.map(lambda p: p.map_exponents(lambda e: (e[0], e[1] + e[0], e[2])) if p else p)
    one_h = 1 + h
    rhs = (t * uq * one_minus * one_h
           + t * uq * (at_one - at_uq) * one_h
           + t * uq * one_minus * Y * at_uq * one_h)
    return rhs - h * one_minus


# -- kernel-method parametrization ------------------------------------------

def _lagrange_terms(n: int):
    """Pairs ``(j, [v^(n-1) y^j] ((1 + v y)(1 + v)^3)^n)``, i.e.
    ``C(n, j) C(3n, n-1-j)``, with binomials updated incrementally."""
    b1, b2 = 1, comb(3 * n, n - 1)
    for j in range(n):
        yield j, b1 * b2
        m = n - 1 - j
        b1 = b1 * (n - j) // (j + 1)
        b2 = b2 * m // (3 * n - m + 1)


def v_series(order: int, y=None) -> TruncatedSeries:
    """``V = t (1 + V y)(1 + V)^3`` by Lagrange inversion:
    ``[t^n] V = (1/n) [v^(n-1)] ((1 + v y)(1 + v)^3)^n``."""
    coeffs = [MultiPoly() if y is None else 0]
    for n in range(1, order + 1):
        if y is None:
            terms = {}
            for j, c in _lagrange_terms(n):
                if c % n:
                    raise NonIntegralCoefficient(f"[t^{n} y^{j}] V = {c}/{n}")
                terms[(0, 0, j)] = c // n
            coeffs.append(MultiPoly(terms))
        else:
            total = 0
            power = 1
            for _, c in _lagrange_terms(n):
                total += c * power
                power *= y
            coeffs.append(Fraction(total, n) if isinstance(total, int) else total / n)
    return _normalize(TruncatedSeries(coeffs))


def _normalize(s: TruncatedSeries) -> TruncatedSeries:
    def fix(c):
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c
    return s.map(fix)


def h11_series(order: int, y=None) -> TruncatedSeries:
    """``H(1,1) = V - V^2 - y V^3``."""
    v = v_series(order, y)
    ycoef = Y if y is None else y
    return _normalize(v - v * v - v ** 3 * ycoef)


def area_polynomial(v: TruncatedSeries, y) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """Coefficients ``(a2, a1, a0)`` of ``a2 A^2 + a1 A + a0 = 0``."""
    ycoef = Y if y is None else y
    one_v = 1 + v
    a2 = v
    a1 = one_v * (v * v * ycoef - 1)
    a0 = v * one_v * one_v * (1 + v * ycoef) * (1 + v * ycoef)
    return a2, a1, a0


@dataclass
class NewtonTrace:
    residual_valuations: list


def area_series(order: int, y=0, trace: NewtonTrace | None = None) -> TruncatedSeries:
    """Total-area series ``A``: the root with ``A(0) = 0`` of
    ``V A^2 + (1 + V)(V^2 y - 1) A + V (1 + V)^2 (1 + y V)^2``.

    Newton iteration doubles the number of correct coefficients per step;
    the result is checked to be integral.
    """
    v = v_series(order, y)
    a2, a1, a0 = area_polynomial(v, y)
    a = TruncatedSeries.zero(order)
    correct = 1
    while True:
        residual = a2 * a * a + a1 * a + a0
        val = residual.valuation()
        if trace is not None:
            trace.residual_valuations.append(order + 1 if val is None else val)
        if val is None or correct > order:
            break
        slope = a2 * a * 2 + a1
        a = a - residual * slope.inverse()
        correct *= 2
    return _normalize(a).as_integers()


def area_closed_form(order: int, y: int) -> TruncatedSeries:
    """``A`` from the explicit radicals at ``y = 0`` and ``y = 1``."""
    v = v_series(order + 1, y)
    if y == 0:
        inner = 1 - (1 - 4 * v * v).sqrt()
    elif y == 1:
        inner = 1 - v * v - ((1 + v) ** 3 * (1 - 3 * v)).sqrt()
    else:
        raise ValueError("closed forms exist for y in {0, 1}")
    # (1 + V) / (2V) * inner; both inner and V are divisible by t
    ratio = inner.shift_down(1) * v.shift_down(1).inverse()
    a = (1 + v.truncate(order)) * ratio * Fraction(1, 2)
    return _normalize(a.truncate(order)).as_integers()


# -- asymptotics -----------------------------------------------------------

def average_area_constant() -> float:
    """``2^(1/4) 3^(3/4) sqrt(pi) / (2 Gamma(3/4))`` (about 1.9605)."""
    return 2 ** 0.25 * 3 ** 0.75 * math.sqrt(math.pi) / (2 * math.gamma(0.75))


@dataclass
class AsymptoticEstimates:
    order: int
    normalized_area: dict      # n -> ([t^n]A / [t^n]H(1,1)) / n^(5/4)
    rho_ratios: dict           # n -> [t^n]V / [t^(n+1)]V
    constant: float
    rho: Fraction = RHO

    def relative_error(self, n: int) -> float:
        return abs(self.normalized_area[n] - self.constant) / self.constant


def asymptotic_ratio(order: int = 500) -> AsymptoticEstimates:
    v = v_series(order + 1, 1)
    h = h11_series(order, 1)
    a = area_series(order, 1)
    e = {n: float(Fraction(a[n], h[n])) / n ** 1.25 for n in range(1, order + 1)}
    r = {n: float(Fraction(v[n], v[n + 1])) for n in range(1, order + 1)}
    return AsymptoticEstimates(order, e, r, average_area_constant())


def partial_sum_at(series: TruncatedSeries, t: Fraction) -> float:
    """Float value of the truncated sum at a rational point."""
    total = 0.0
    for k, c in enumerate(series.coeffs):
        if c:
            total += float(Fraction(c) * t ** k)
    return total
