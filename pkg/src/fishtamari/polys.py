"""Exact integer polynomials in ``u, q, y``.

Large products go through Kronecker substitution: both operands are packed
into one big integer, multiplied once, and unpacked with balanced digits.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NonExactDivision

try:
    import gmpy2

    def _bigmul(x: int, y: int) -> int:
        return int(gmpy2.mpz(x) * gmpy2.mpz(y))
except ImportError:  # pragma: no cover
    def _bigmul(x: int, y: int) -> int:
        return x * y

VARS = ("u", "q", "y")
_NAIVE_LIMIT = 400


def _pack(values: list[int], nbytes: int) -> int:
    pos = bytearray(len(values) * nbytes)
    neg = None
    for k, v in enumerate(values):
        if v > 0:
            pos[k * nbytes:(k + 1) * nbytes] = v.to_bytes(nbytes, "little")
        elif v < 0:
            if neg is None:
                neg = bytearray(len(values) * nbytes)
            neg[k * nbytes:(k + 1) * nbytes] = (-v).to_bytes(nbytes, "little")
    out = int.from_bytes(pos, "little")
    if neg is not None:
        out -= int.from_bytes(neg, "little")
    return out


def _unpack(value: int, nslots: int, nbytes: int) -> list[int]:
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * nslots, "little")
    raw = (value + offset).to_bytes(nslots * nbytes, "little")
    return [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half
            for k in range(nslots)]


def dense_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of two dense integer coefficient lists."""
    if not a or not b:
        return []
    if len(a) * len(b) <= _NAIVE_LIMIT:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if not ma or not mb:
        return [0] * (len(a) + len(b) - 1)
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    prod = _bigmul(_pack(a, nbytes), _pack(b, nbytes))
    return _unpack(prod, len(a) + len(b) - 1, nbytes)


def dense_mul_rational(a: list, b: list) -> list:
    """Like :func:`dense_mul` for int/Fraction entries."""
    if all(isinstance(x, int) for x in a) and all(isinstance(x, int) for x in b):
        return dense_mul(a, b)
    da = _lcm_den(a)
    db = _lcm_den(b)
    ia = [int(x * da) for x in a]
    ib = [int(x * db) for x in b]
    den = da * db
    return [Fraction(x, den) for x in dense_mul(ia, ib)]


def _lcm_den(xs) -> int:
    from math import lcm

    out = 1
    for x in xs:
        if isinstance(x, Fraction):
            out = lcm(out, x.denominator)
    return out


class MultiPoly:
    """Sparse polynomial with integer coefficients keyed by ``(e_u, e_q, e_y)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c: int) -> MultiPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, eu=0, eq=0, ey=0, coef=1) -> MultiPoly:
        return cls({(eu, eq, ey): coef})

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other) -> MultiPoly:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly()
        if len(a) * len(b) <= _NAIVE_LIMIT:
            out: dict = {}
            for (a0, a1, a2), x in a.items():
                for (b0, b1, b2), y in b.items():
                    k = (a0 + b0, a1 + b1, a2 + b2)
                    out[k] = out.get(k, 0) + x * y
            return MultiPoly(out)
        return _kronecker_mul(a, b)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self, name: str) -> int:
        i = VARS.index(name)
        return max((e[i] for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0, 0, 0), 0)

    def subs(self, u=None, q=None, y=None) -> MultiPoly | int | Fraction:
        """Substitute numbers for some variables.

        Returns a number when every variable present is substituted.
        """
        vals = (u, q, y)
        out: dict = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, v in enumerate(vals):
                if v is not None and e[i]:
                    c = c * v ** e[i]
                    ne[i] = 0
                elif v is not None:
                    ne[i] = 0
            out[tuple(ne)] = out.get(tuple(ne), 0) + c
        if all(e == (0, 0, 0) for e in out):
            return out.get((0, 0, 0), 0)
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in out.values()):
            raise ValueError("rational substitution left free variables")
        return MultiPoly({k: int(v) for k, v in out.items()})

    def map_exponents(self, fn) -> MultiPoly:
        out: dict = {}
        for e, c in self.terms.items():
            k = fn(e)
            out[k] = out.get(k, 0) + c
        return MultiPoly(out)

    def derivative(self, name: str) -> MultiPoly:
        i = VARS.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(out)

    def divide_one_minus(self, shift: tuple[int, int, int], coef: int = 1) -> MultiPoly:
        """Exact quotient by ``1 - coef * u^a q^b y^c`` with ``shift = (a, b, c)``.

        Raises :class:`NonExactDivision` if a remainder is left.
        """
        if shift == (0, 0, 0):
            raise ValueError("divisor must be non-constant")
        if coef == 0:
            return MultiPoly(self.terms)
        # the quotient obeys Q_e = N_e + coef * Q_{e - shift}; walk each chain
        chains: dict = {}
        for e, c in self.terms.items():
            k = min(e[i] // shift[i] for i in range(3) if shift[i])
            base = tuple(e[i] - k * shift[i] for i in range(3))
            chains.setdefault(base, {})[k] = c
        out = {}
        for base, steps in chains.items():
            acc = 0
            top = max(steps)
            for k in range(top + 1):
                acc = acc * coef + steps.get(k, 0)
                if k < top or acc == 0:
                    if acc:
                        out[tuple(base[i] + k * shift[i] for i in range(3))] = acc
                    continue
                raise NonExactDivision(f"remainder along chain starting at {base}")
        return MultiPoly(out)


def _kronecker_mul(a: dict, b: dict) -> MultiPoly:
    dims = [max(e[i] for e in a) + max(e[i] for e in b) + 1 for i in range(3)]
    d1, d2 = dims[1], dims[2]

    def index(e):
        return (e[0] * d1 + e[1]) * d2 + e[2]

    def dense(terms):
        vals = [0] * (max(index(e) for e in terms) + 1)
        for e, c in terms.items():
            vals[index(e)] = c
        return vals

    prod = dense_mul(dense(a), dense(b))
    out = {}
    for k, c in enumerate(prod):
        if c:
            e0, rest = divmod(k, d1 * d2)
            e1, e2 = divmod(rest, d2)
            out[(e0, e1, e2)] = c
    return MultiPoly(out)


U = MultiPoly.var("u")
Q = MultiPoly.var("q")
Y = MultiPoly.var("y")
ONE = MultiPoly.const(1)
