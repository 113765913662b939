"""Rational Witt vectors and rational reconstruction.

A rational Witt vector is a pair of polynomials (p, q) with constant terms
1, standing for the series p/q; in Witt terms that is p -_W q.  The class
of such elements is closed under the Witt product, and the product is
computed exactly by resultants instead of truncated series: for the
building block (1/p) * (1/q) the answer is 1/r with

    r(t) = Res_x( x^(deg p) * p(1/x), q(t*x) ),

the Sylvester determinant taken at x-degrees (deg p, deg q) over R[t].
Writing f = (1/b) -_W (1/a) and g = (1/d) -_W (1/c) and expanding
bilinearly gives the product pair

    f * g = ( star(a,d) * star(b,c) , star(a,c) * star(b,d) ).

`rationalize` goes the other way: given a truncated series it searches for
a representing pair with bounded degrees by solving the Hankel linear
system over the fraction field, preferring the smallest denominator degree
and returning None when no pair exists within the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionTooLow
from .polynomials import Poly1Ring, resultant
from .rings import MPolyRing, QQ, Ring, ZZ
from .series import TruncSeries


@dataclass(frozen=True)
class RatWitt:
    """Pair (num, den) of coefficient tuples over `ring`, constant terms 1."""

    ring: Ring
    num: tuple
    den: tuple

    def __post_init__(self):
        for part in (self.num, self.den):
            if not part or part[0] != self.ring.one:
                raise ValueError("numerator and denominator need constant term 1")

    def __repr__(self):
        return f"RatWitt({self.render()!r})"

    def render(self) -> str:
        rt = Poly1Ring(self.ring, "t")
        return f"({rt.render(self.num)})/({rt.render(self.den)})"

    def render_json(self) -> dict:
        return {
            "num": [self.ring.render(c) for c in self.num],
            "den": [self.ring.render(c) for c in self.den],
        }


def rat_make(ring: Ring, num, den) -> RatWitt:
    rt = Poly1Ring(ring, "t")
    num, den = rt.trim(num), rt.trim(den)
    if ring in (ZZ, QQ):
        num, den = _reduce_over_rationals(ring, num, den)
    return RatWitt(ring, num, den)


def rat_zero(ring: Ring) -> RatWitt:
    return RatWitt(ring, (ring.one,), (ring.one,))


def rat_unit(ring: Ring) -> RatWitt:
    return RatWitt(ring, (ring.one,), (ring.one, ring.neg(ring.one)))


def rat_expand(f: RatWitt, precision: int) -> TruncSeries:
    num = TruncSeries.make(f.ring, f.num, precision)
    den = TruncSeries.make(f.ring, f.den, precision)
    return num.mul(den.invert())


def rat_equal(f: RatWitt, g: RatWitt) -> bool:
    """Equality of the denoted series, by cross-multiplication."""
    if f.ring != g.ring:
        return False
    rt = Poly1Ring(f.ring, "t")
    return rt.mul(f.num, g.den) == rt.mul(g.num, f.den)


def rat_star(ring: Ring, p: tuple, q: tuple) -> tuple:
    """The polynomial r with (1/p) * (1/q) = 1/r in the Witt ring."""
    rt = Poly1Ring(ring, "t")
    p, q = rt.trim(p), rt.trim(q)
    dp, dq = len(p) - 1, len(q) - 1
    if dp < 1 or dq < 1:
        return (ring.one,)
    # A(x) = x^dp * p(1/x), monic of degree dp with entries in R
    # B(x) = q(t*x), coefficient of x^j is q_j * t^j in R[t]
    a_coeffs = tuple(rt.constant(c) for c in reversed(p))
    b_coeffs = tuple(rt.monomial(j, c) for j, c in enumerate(q))
    r = resultant(rt, a_coeffs, b_coeffs, dp, dq)
    assert r and r[0] == ring.one, "star product lost its constant term"
    return r


def rat_add(f: RatWitt, g: RatWitt) -> RatWitt:
    rt = Poly1Ring(f.ring, "t")
    return rat_make(f.ring, rt.mul(f.num, g.num), rt.mul(f.den, g.den))


def rat_neg(f: RatWitt) -> RatWitt:
    return rat_make(f.ring, f.den, f.num)


def rat_sub(f: RatWitt, g: RatWitt) -> RatWitt:
    return rat_add(f, rat_neg(g))


def rat_mul(f: RatWitt, g: RatWitt) -> RatWitt:
    ring = f.ring
    rt = Poly1Ring(ring, "t")
    a, b, c, d = f.num, f.den, g.num, g.den
    num = rt.mul(rat_star(ring, a, d), rat_star(ring, b, c))
    den = rt.mul(rat_star(ring, a, c), rat_star(ring, b, d))
    return rat_make(ring, num, den)


def _reduce_over_rationals(ring: Ring, num, den):
    """Cancel the common factor, keeping both constant terms at 1."""
    qt = Poly1Ring(QQ, "t")
    num_q = tuple(Fraction(c) for c in num)
    den_q = tuple(Fraction(c) for c in den)
    g = qt.gcd(num_q, den_q)
    if len(g) > 1:
        # constant terms 1 force g(0) != 0; normalize so division keeps them
        g = qt.scale(1 / g[0], g)
        num_q, rn = qt.divmod(num_q, g)
        den_q, rd = qt.divmod(den_q, g)
        assert not rn and not rd
    if ring is ZZ:
        out = []
        for part in (num_q, den_q):
            vals = [int(c) if c.denominator == 1 else None for c in part]
            assert None not in vals, "reduction left the integers"
            out.append(tuple(vals))
        return out[0], out[1]
    return num_q, den_q


class RatFuncRing(Ring):
    """Field of univariate rational functions over the rationals.

    Elements are (num, den) pairs of coefficient tuples with a monic,
    coprime denominator; the zero element is ((), (1,)).
    """

    torsion_free = True
    is_field = True
    characteristic = 0

    def __init__(self, var: str = "u"):
        self.var = var
        self.poly = Poly1Ring(QQ, var)
        self.name = f"QQ({var})"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, RatFuncRing) and self.var == other.var

    def __hash__(self):
        return hash((RatFuncRing, self.var))

    @property
    def zero(self):
        return ((), (Fraction(1),))

    @property
    def one(self):
        return ((Fraction(1),), (Fraction(1),))

    def make(self, num, den):
        pr = self.poly
        num, den = pr.trim(num), pr.trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in a rational function")
        g = pr.gcd(num, den)
        if len(g) > 1:
            num, _ = pr.divmod(num, g)
            den, _ = pr.divmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = pr.scale(1 / lead, num)
            den = pr.scale(1 / lead, den)
        return (num, den)

    def from_poly(self, coeffs):
        return self.make(tuple(Fraction(c) for c in coeffs), (Fraction(1),))

    def add(self, a, b):
        pr = self.poly
        num = pr.add(pr.mul(a[0], b[1]), pr.mul(b[0], a[1]))
        return self.make(num, pr.mul(a[1], b[1]))

    def neg(self, a):
        return (self.poly.neg(a[0]), a[1])

    def mul(self, a, b):
        pr = self.poly
        return self.make(pr.mul(a[0], b[0]), pr.mul(a[1], b[1]))

    def from_int(self, n):
        return self.from_poly((Fraction(n),))

    def try_inverse(self, a):
        if not a[0]:
            return None
        return self.make(a[1], a[0])

    def exact_div(self, a, b):
        inv = self.try_inverse(b)
        if inv is None:
            raise ZeroDivisionError("division by zero rational function")
        return self.mul(a, inv)

    def rationalization(self):
        return self, lambda x: x, lambda x: x

    def render(self, a) -> str:
        pr = self.poly
        if a[1] == (Fraction(1),):
            return pr.render(a[0])
        return f"({pr.render(a[0])})/({pr.render(a[1])})"


def _univariate_coeffs(ring: MPolyRing, a) -> list:
    out = [ring.base.zero] * (ring.total_degree(a) + 1 if a else 0)
    for exps, c in a:
        out[exps[0]] = c
    return out


def fraction_field(ring: Ring):
    """(field, embed, retract) for rings whose fractions we can work in.

    `retract` maps a field element back into `ring` or returns None when it
    does not belong there.
    """
    if ring is ZZ:
        return QQ, Fraction, lambda x: int(x) if x.denominator == 1 else None
    if ring is QQ:
        return QQ, lambda x: x, lambda x: x
    if isinstance(ring, MPolyRing) and len(ring.vars) == 1:
        field = RatFuncRing(ring.vars[0])

        def embed(a):
            return field.from_poly(Fraction(c) for c in _univariate_coeffs(ring, a))

        def retract(x):
            num, den = x
            if den != (Fraction(1),):
                return None
            if not ring.rational and any(c.denominator != 1 for c in num):
                return None
            terms = {}
            for i, c in enumerate(num):
                if c:
                    terms[(i,)] = c if ring.rational else int(c)
            return ring.from_terms(terms)

        return field, embed, retract
    raise ValueError(f"no fraction field support for {ring.name}")


def _solve_linear(field: Ring, rows: list, unknowns: int):
    """One solution of the system, free unknowns set to 0; None if none."""
    m = [list(r) for r in rows]  # each row: unknowns coefficients + rhs
    pivots = []
    row = 0
    for col in range(unknowns):
        pivot = next(
            (r for r in range(row, len(m)) if not field.is_zero(m[r][col])),
            None,
        )
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = field.try_inverse(m[row][col])
        m[row] = [field.mul(inv, v) for v in m[row]]
        for r in range(len(m)):
            if r != row and not field.is_zero(m[r][col]):
                factor = m[r][col]
                m[r] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(m[r], m[row])
                ]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    for r in range(row, len(m)):
        if not field.is_zero(m[r][unknowns]):
            return None
    solution = [field.zero] * unknowns
    for r, col in enumerate(pivots):
        solution[col] = m[r][unknowns]
    return solution


def rationalize(g: TruncSeries, dmax: int):
    """Smallest (num, den) pair matching g on its whole window, or None.

    Searches denominator degrees 0..dmax, then numerator degrees, and
    requires every available coefficient of g to match, which needs
    2*dmax < precision; below that bound the answer would not be trustworthy
    and PrecisionTooLow is raised.
    """
    n_max = g.precision
    if 2 * dmax >= n_max:
        raise PrecisionTooLow(
            f"need 2*dmax < precision, got dmax={dmax}, precision={n_max}"
        )
    ring = g.ring
    field, embed, retract = fraction_field(ring)
    c = [embed(x) for x in g.coeffs]

    for dq in range(dmax + 1):
        for dp in range(dmax + 1):
            rows = []
            for n in range(dp + 1, n_max + 1):
                row = [
                    c[n - j] if n - j >= 0 else field.zero
                    for j in range(1, dq + 1)
                ]
                row.append(field.neg(c[n]))
                rows.append(row)
            sol = _solve_linear(field, rows, dq)
            if sol is None:
                continue
            q = [field.one] + sol
            p = []
            for i in range(dp + 1):
                acc = field.zero
                for j in range(0, min(i, dq) + 1):
                    acc = field.add(acc, field.mul(q[j], c[i - j]))
                p.append(acc)
            return _assemble(ring, field, retract, p, q)
    return None


def _assemble(ring, field, retract, p, q):
    back_p = [retract(x) for x in p]
    back_q = [retract(x) for x in q]
    if None not in back_p and None not in back_q:
        return rat_make(ring, back_p, back_q)
    return rat_make(field, tuple(p), tuple(q))
