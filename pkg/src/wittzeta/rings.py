"""Exact commutative coefficient rings.

Supported rings: the integers, the rationals, integer/rational polynomial
rings in finitely many named variables, and finite fields (see
:mod:`wittzeta.finitefield` for the field construction itself).

Elements are plain immutable Python values interpreted by their ring object:

* integers             -> ``int``
* rationals            -> ``fractions.Fraction``
* polynomials          -> tuple of ``(exponent-tuple, coefficient)`` terms,
                          sorted by (total degree, then inverse-lex), no zero
                          terms; the empty tuple is the zero polynomial
* finite field element -> ``int`` in ``[0, q)`` encoding the coefficient
                          vector in base p, constant digit least significant

All representations are canonical, so ``==`` and ``hash`` behave and every
value can be shared freely between threads.  Torsion-free rings additionally
expose their rationalization (tensor with the rationals) together with an
exact membership test for the image, which is what makes Witt multiplication
via ghost coordinates possible without ever touching floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegral


class Ring:
    """Interface shared by all coefficient rings."""

    name: str
    torsion_free: bool
    is_field: bool
    characteristic: int

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def render(self, a) -> str:
        raise NotImplementedError

    # derived helpers

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def mul_int(self, a, n: int):
        return self.mul(a, self.from_int(n))

    def power(self, a, n: int):
        if n < 0:
            raise ValueError("negative power in a plain ring")
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def try_inverse(self, a):
        """Inverse of a unit, or None when `a` is not invertible."""
        raise NotImplementedError

    def exact_div(self, a, b):
        """Quotient a/b when it exists in the ring; raises NonIntegral otherwise."""
        raise NotImplementedError

    def rationalization(self):
        """Return (Q-ring, embed, retract); retract gives None off the image."""
        raise NotImplementedError


class IntegerRing(Ring):
    name = "ZZ"
    torsion_free = True
    is_field = False
    characteristic = 0

    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def render(self, a):
        return str(a)

    def try_inverse(self, a):
        return a if a in (1, -1) else None

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise NonIntegral(f"{a} is not divisible by {b}")
        return q

    def rationalization(self):
        return QQ, Fraction, _fraction_to_int

    def __repr__(self):
        return "ZZ"


def _fraction_to_int(x: Fraction):
    return int(x) if x.denominator == 1 else None


class RationalRing(Ring):
    name = "QQ"
    torsion_free = True
    is_field = True
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def render(self, a):
        return str(a)

    def try_inverse(self, a):
        return 1 / a if a else None

    def exact_div(self, a, b):
        if not b:
            raise NonIntegral("division by zero")
        return a / b

    def rationalization(self):
        return self, lambda x: x, lambda x: x

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalRing()


class MPolyRing(Ring):
    """Polynomials in named variables over ZZ (or QQ when rational=True).

    Terms are stored as a tuple of (exponents, coefficient) pairs ordered by
    ascending total degree, ties broken so that earlier variables come first;
    this is also the printing order.
    """

    torsion_free = True
    is_field = False
    characteristic = 0

    def __init__(self, variables: tuple[str, ...], rational: bool = False):
        if not variables:
            raise ValueError("polynomial ring needs at least one variable")
        self.vars = tuple(variables)
        self.rational = rational
        self.base = QQ if rational else ZZ
        base_name = "QQ" if rational else "ZZ"
        self.name = f"{base_name}[{','.join(self.vars)}]"
        self._zero_exps = (0,) * len(self.vars)
        self._univariate = len(self.vars) == 1

    def __eq__(self, other):
        return (
            isinstance(other, MPolyRing)
            and self.vars == other.vars
            and self.rational == other.rational
        )

    def __hash__(self):
        return hash((self.vars, self.rational))

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return ((self._zero_exps, self.base.one),)

    def _canon(self, terms: dict):
        items = [(e, c) for e, c in terms.items() if c != self.base.zero]
        if len(items) > 1:
            if self._univariate:
                items.sort()
            else:
                items.sort(key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))
        return tuple(items)

    def from_terms(self, terms: dict):
        return self._canon(dict(terms))

    def monomial(self, exps, coeff=None):
        coeff = self.base.one if coeff is None else coeff
        if coeff == self.base.zero:
            return ()
        return ((tuple(exps), coeff),)

    def variable(self, name: str):
        i = self.vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.vars)))
        return self.monomial(exps)

    def add(self, a, b):
        terms = dict(a)
        for e, c in b:
            s = terms.get(e, self.base.zero) + c
            if s == self.base.zero:
                terms.pop(e, None)
            else:
                terms[e] = s
        return self._canon(terms)

    def neg(self, a):
        return tuple((e, -c) for e, c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        terms: dict = {}
        get = terms.get
        if self._univariate:
            # exponents are bare ints here, retupled once at the end
            for (xa,), ca in a:
                for (xb,), cb in b:
                    e = xa + xb
                    prev = get(e)
                    terms[e] = ca * cb if prev is None else prev + ca * cb
            zero = self.base.zero
            return tuple(
                ((e,), c) for e, c in sorted(terms.items()) if c != zero
            )
        for ea, ca in a:
            for eb, cb in b:
                e = tuple(map(int.__add__, ea, eb))
                prev = get(e)
                terms[e] = ca * cb if prev is None else prev + ca * cb
        return self._canon(terms)

    def from_int(self, n):
        return self.monomial(self._zero_exps, self.base.from_int(n))

    def scalar(self, c):
        return self.monomial(self._zero_exps, c)

    def is_constant(self, a) -> bool:
        return all(e == self._zero_exps for e, _ in a)

    def constant_value(self, a):
        """Coefficient of the constant term."""
        for e, c in a:
            if e == self._zero_exps:
                return c
        return self.base.zero

    def total_degree(self, a) -> int:
        return max((sum(e) for e, _ in a), default=-1)

    def degree_in(self, a, index: int) -> int:
        return max((e[index] for e, _ in a), default=-1)

    def coefficient_in(self, a, index: int, power: int):
        """Coefficient of var_index^power, a polynomial in the same ring."""
        picked = {}
        for e, c in a:
            if e[index] == power:
                reduced = tuple(x if j != index else 0 for j, x in enumerate(e))
                picked[reduced] = picked.get(reduced, self.base.zero) + c
        return self._canon(picked)

    def try_inverse(self, a):
        if len(a) != 1:
            return None
        e, c = a[0]
        if e != self._zero_exps:
            return None
        inv = self.base.try_inverse(c)
        if inv is None:
            return None
        return self.monomial(self._zero_exps, inv)

    def exact_div(self, a, b):
        """Exact polynomial quotient; raises NonIntegral when b does not divide a."""
        if not b:
            raise NonIntegral("division by the zero polynomial")
        if len(b) == 1 and b[0][0] == self._zero_exps:
            cb = b[0][1]
            if self.rational:
                return self._canon({e: c / cb for e, c in a})
            return self._canon({e: ZZ.exact_div(c, cb) for e, c in a})
        quotient: dict = {}
        rem = a
        eb, cb = b[-1]  # leading term in the graded order
        while rem:
            ea, ca = rem[-1]
            exps = tuple(x - y for x, y in zip(ea, eb))
            if any(x < 0 for x in exps):
                raise NonIntegral("inexact polynomial division (monomials)")
            if self.rational:
                coeff = ca / cb
            else:
                coeff = ZZ.exact_div(ca, cb)
            quotient[exps] = quotient.get(exps, self.base.zero) + coeff
            rem = self.sub(rem, self.mul(self.monomial(exps, coeff), b))
        return self._canon(quotient)

    def rationalization(self):
        qring = poly_ring(self.vars, rational=True)
        if self.rational:
            return self, lambda x: x, lambda x: x

        def embed(a):
            return tuple((e, Fraction(c)) for e, c in a)

        def retract(a):
            out = []
            for e, c in a:
                if c.denominator != 1:
                    return None
                out.append((e, int(c)))
            return tuple(out)

        return qring, embed, retract

    def render(self, a) -> str:
        if not a:
            return "0"
        parts = []
        for e, c in a:
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e)
                if k
            )
            if not mono:
                text = str(c)
            elif c == self.base.one:
                text = mono
            elif c == -self.base.one:
                text = "-" + mono
            else:
                text = f"{c}*{mono}"
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out


@lru_cache(maxsize=None)
def poly_ring(variables: tuple[str, ...], rational: bool = False) -> MPolyRing:
    return MPolyRing(variables, rational)


def int_poly_ring(*variables: str) -> MPolyRing:
    """Integer polynomial ring in the given variables (default single 'u')."""
    return poly_ring(variables or ("u",))
