"""Exact arithmetic in Z[q^(1/D), q^(-1/D)] and balanced quantum combinatorics.

Every scalar in this package is a Laurent polynomial in a formal variable q,
with integer coefficients and exponents in (1/D)Z for some denominator D
(D = m for braiding computations, 1 elsewhere).  Exponents are stored as
integer numerators over a canonical per-value denominator, so all arithmetic
is pure integer arithmetic; values with different denominators interoperate
by lifting to the lcm.  Values are immutable and hashable.

Quantum integers are balanced: [n] = q^(n-1) + q^(n-3) + ... + q^(1-n), so
[n] = [n] under q -> q^(-1) and [n](1) = n.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping, Union

ExponentLike = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Exact division in Z[q^(1/D)] failed.

    Divisions here back quantum binomials and divided powers; failure signals
    an arithmetic or convention bug, never bad user input.
    """


def _normalize(terms: dict[int, int], den: int) -> tuple[dict[int, int], int]:
    terms = {e: c for e, c in terms.items() if c}
    if not terms:
        return {}, 1
    g = den
    for e in terms:
        g = gcd(g, e)
        if g == 1:
            break
    if g > 1:
        terms = {e // g: c for e, c in terms.items()}
        den //= g
    return terms, den


class Laurent:
    """A Laurent polynomial sum of c * q^(e/den) with integer c, e."""

    __slots__ = ("_terms", "_den", "_hash")

    def __init__(self, terms: Mapping[int, int] = (), den: int = 1):
        if den < 1:
            raise ValueError("denominator must be positive")
        t, d = _normalize(dict(terms), den)
        object.__setattr__(self, "_terms", t)
        object.__setattr__(self, "_den", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Laurent values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Laurent":
        return _ZERO

    @classmethod
    def one(cls) -> "Laurent":
        return _ONE

    @classmethod
    def integer(cls, n: int) -> "Laurent":
        return cls({0: n}) if n else _ZERO

    @classmethod
    def q(cls, num: int = 1, den: int = 1) -> "Laurent":
        """The monomial q^(num/den)."""
        if den < 0:
            num, den = -num, -den
        return cls({num: 1}, den)

    @classmethod
    def from_exponents(cls, terms: Mapping[ExponentLike, int]) -> "Laurent":
        """Build from a map exponent -> coefficient with Fraction/int keys."""
        den = 1
        fracs = {}
        for e, c in terms.items():
            f = Fraction(e)
            fracs[f] = fracs.get(f, 0) + c
            den = den * f.denominator // gcd(den, f.denominator)
        return cls({int(f * den): c for f, c in fracs.items()}, den)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Fraction, int]]:
        """Sorted (exponent, coefficient) pairs, exponents as Fractions."""
        d = self._den
        return [(Fraction(e, d), c) for e, c in sorted(self._terms.items())]

    def n_terms(self) -> int:
        return len(self._terms)

    def valuation(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero has no valuation")
        return Fraction(min(self._terms), self._den)

    def degree(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero has no degree")
        return Fraction(max(self._terms), self._den)

    def is_unit(self) -> bool:
        """Units of Z[q^(1/D)] are the single terms with coefficient +-1."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def unit_inverse(self) -> "Laurent":
        if not self.is_unit():
            raise ValueError(f"not a unit: {self}")
        ((e, c),) = self._terms.items()
        return Laurent({-e: c}, self._den)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    # -- arithmetic --------------------------------------------------------

    def _lift(self, den: int) -> dict[int, int]:
        f = den // self._den
        if f == 1:
            return dict(self._terms)
        return {e * f: c for e, c in self._terms.items()}

    def __add__(self, other) -> "Laurent":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den = self._den * other._den // gcd(self._den, other._den)
        t = self._lift(den)
        for e, c in other._lift(den).items():
            t[e] = t.get(e, 0) + c
        return Laurent(t, den)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self._terms.items()}, self._den)

    def __sub__(self, other) -> "Laurent":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Laurent":
        return _coerce(other) - self

    def __mul__(self, other) -> "Laurent":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        den = self._den * other._den // gcd(self._den, other._den)
        a = self._lift(den)
        b = other._lift(den)
        t: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                t[e] = t.get(e, 0) + ca * cb
        return Laurent(t, den)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            return self.unit_inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._den == other._den and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self._den, tuple(sorted(self._terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    # -- involutions and evaluations ----------------------------------------

    def bar(self) -> "Laurent":
        """The bar involution q -> q^(-1)."""
        return Laurent({-e: c for e, c in self._terms.items()}, self._den)

    def at_one(self) -> int:
        """Evaluate at q = 1."""
        return sum(self._terms.values())

    def divexact(self, other) -> "Laurent":
        """Exact division; raises InexactDivisionError if it fails.

        Performed over Q[q^(1/D)] from the lowest term up, then checked for
        integrality of the quotient and vanishing of the remainder.
        """
        other = _coerce(other)
        if other is NotImplemented or not other._terms:
            raise InexactDivisionError("division by zero")
        if not self._terms:
            return _ZERO
        den = self._den * other._den // gcd(self._den, other._den)
        rem = {e: Fraction(c) for e, c in self._lift(den).items()}
        div = other._lift(den)
        dmin = min(div)
        dlead = div[dmin]
        bound = max(rem) - max(div)
        quot: dict[int, Fraction] = {}
        while rem:
            e = min(rem)
            qe = e - dmin
            if qe > bound:
                raise InexactDivisionError(f"({self}) not divisible by ({other})")
            qc = rem[e] / dlead
            quot[qe] = qc
            for ed, cd in div.items():
                k = qe + ed
                v = rem.get(k, Fraction(0)) - qc * cd
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        out = {}
        for e, c in quot.items():
            if c.denominator != 1:
                raise InexactDivisionError(f"({self}) / ({other}) not integral")
            if c:
                out[e] = int(c)
        return Laurent(out, den)

    # -- rendering -----------------------------------------------------------

    def text(self) -> str:
        """Canonical text: signed sum of c*q^(a/b) terms, ascending exponent.

        No spaces, so the string can be used as a field in line-oriented files.
        """
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                f = Fraction(e, self._den)
                ex = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
                body = f"{mag}*q^({ex})"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return self.text()


def _coerce(x) -> "Laurent":
    if isinstance(x, Laurent):
        return x
    if isinstance(x, int):
        return Laurent.integer(x)
    return NotImplemented


_ZERO = object.__new__(Laurent)
object.__setattr__(_ZERO, "_terms", {})
object.__setattr__(_ZERO, "_den", 1)
object.__setattr__(_ZERO, "_hash", None)

_ONE = object.__new__(Laurent)
object.__setattr__(_ONE, "_terms", {0: 1})
object.__setattr__(_ONE, "_den", 1)
object.__setattr__(_ONE, "_hash", None)

ZERO = _ZERO
ONE = _ONE


# ---------------------------------------------------------------------------
# quantum combinatorics


def qint(n: int) -> Laurent:
    """Balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    [0] = 0. For n < 0 returns -[−n], matching (q^n - q^-n)/(q - q^-1).
    """
    if n < 0:
        return -qint(-n)
    return Laurent({n - 1 - 2 * j: 1 for j in range(n)})


def qfact(n: int) -> Laurent:
    """Quantum factorial [n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError("qfact needs n >= 0")
    out = ONE
    for j in range(2, n + 1):
        out = out * qint(j)
    return out


def qbinom(n: int, k: int) -> Laurent:
    """Gaussian binomial [n]!/([k]![n-k]!), computed by exact division.

    Palindromic in q <-> q^(-1); value at q = 1 is the ordinary binomial.
    """
    if not 0 <= k <= n:
        raise ValueError(f"qbinom needs 0 <= k <= n, got ({n}, {k})")
    return qfact(n).divexact(qfact(k) * qfact(n - k))


def gdim_projective(n: int) -> Laurent:
    """Graded dimension of the symmetric cohomology of n-dimensional
    projective space: q^(-n) + q^(-n+2) + ... + q^n = [n+1]."""
    if n < 0:
        raise ValueError("gdim_projective needs n >= 0")
    return qint(n + 1)


def is_graded_dimension(s: Laurent) -> bool:
    """True for palindromic values with nonnegative coefficients and integer
    exponents (the graded dimensions of bigraded symmetric cohomology)."""
    return (
        s._den == 1
        and all(c > 0 for c in s._terms.values())
        and s == s.bar()
    )
