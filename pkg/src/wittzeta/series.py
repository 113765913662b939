"""Truncated power series with exact coefficients.

A series of precision N stores the N+1 coefficients of t^0 .. t^N; all
operations are exact on that window and the tail is reported as O(t^(N+1)).
Instances are immutable and the precision is part of the value: mixing two
precisions (or two coefficient rings) raises instead of silently truncating,
because every identity checked downstream is an equality of windows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NonUnitConstantTerm,
    PrecisionMismatch,
    RingMismatch,
)
from .rings import Ring


@dataclass(frozen=True)
class TruncSeries:
    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series stores at least its constant term")

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"TruncSeries({self.render()!r})"

    # constructors

    @staticmethod
    def make(ring: Ring, coeffs, precision: int) -> "TruncSeries":
        coeffs = list(coeffs)[: precision + 1]
        coeffs += [ring.zero] * (precision + 1 - len(coeffs))
        return TruncSeries(ring, tuple(coeffs))

    @staticmethod
    def constant(ring: Ring, value, precision: int) -> "TruncSeries":
        return TruncSeries.make(ring, [value], precision)

    @staticmethod
    def one(ring: Ring, precision: int) -> "TruncSeries":
        return TruncSeries.constant(ring, ring.one, precision)

    @staticmethod
    def geometric(ring: Ring, a, precision: int) -> "TruncSeries":
        """(1 - a*t)^(-1) = 1 + a*t + a^2*t^2 + ..."""
        coeffs = [ring.one]
        for _ in range(precision):
            coeffs.append(ring.mul(coeffs[-1], a))
        return TruncSeries(ring, tuple(coeffs))

    # helpers

    def coefficient(self, n: int):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else self.ring.zero

    def check_compatible(self, other: "TruncSeries"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.name} vs {other.ring.name}")
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"{self.precision} vs {other.precision}"
            )

    def truncate(self, precision: int) -> "TruncSeries":
        if precision == self.precision:
            return self
        return TruncSeries.make(self.ring, self.coeffs, precision)

    def map_coefficients(self, ring: Ring, fn) -> "TruncSeries":
        return TruncSeries(ring, tuple(fn(c) for c in self.coeffs))

    # arithmetic

    def add(self, other: "TruncSeries") -> "TruncSeries":
        self.check_compatible(other)
        r = self.ring
        return TruncSeries(
            r, tuple(r.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def sub(self, other: "TruncSeries") -> "TruncSeries":
        self.check_compatible(other)
        r = self.ring
        return TruncSeries(
            r, tuple(r.sub(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def neg(self) -> "TruncSeries":
        r = self.ring
        return TruncSeries(r, tuple(r.neg(a) for a in self.coeffs))

    def mul(self, other: "TruncSeries") -> "TruncSeries":
        self.check_compatible(other)
        r = self.ring
        n = len(self.coeffs)
        out = [r.zero] * n
        for i, a in enumerate(self.coeffs):
            if r.is_zero(a):
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not r.is_zero(b):
                    out[i + j] = r.add(out[i + j], r.mul(a, b))
        return TruncSeries(r, tuple(out))

    def invert(self) -> "TruncSeries":
        r = self.ring
        inv0 = r.try_inverse(self.coeffs[0])
        if inv0 is None:
            raise NonUnitConstantTerm(
                f"constant term {r.render(self.coeffs[0])} is not a unit"
            )
        out = [inv0]
        for n in range(1, len(self.coeffs)):
            acc = r.zero
            for i in range(1, n + 1):
                c = self.coefficient(i)
                if not r.is_zero(c):
                    acc = r.add(acc, r.mul(c, out[n - i]))
            out.append(r.neg(r.mul(inv0, acc)))
        return TruncSeries(r, tuple(out))

    def pow_int(self, n: int) -> "TruncSeries":
        base = self if n >= 0 else self.invert()
        n = abs(n)
        result = TruncSeries.one(self.ring, self.precision)
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    def scale_argument(self, s) -> "TruncSeries":
        """g(t) -> g(s*t), multiplying the n-th coefficient by s^n."""
        r = self.ring
        out = []
        power = r.one
        for c in self.coeffs:
            out.append(r.mul(c, power))
            power = r.mul(power, s)
        return TruncSeries(r, tuple(out))

    def stretch_argument(self, d: int) -> "TruncSeries":
        """g(t) -> g(t^d) at the same precision."""
        if d < 1:
            raise ValueError("stretch factor must be positive")
        r = self.ring
        out = [r.zero] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if i * d >= len(out):
                break
            out[i * d] = c
        return TruncSeries(r, tuple(out))

    # presentation

    def render(self) -> str:
        r = self.ring
        parts = []
        for i, c in enumerate(self.coeffs):
            if r.is_zero(c):
                continue
            text = r.render(c)
            if i == 0:
                parts.append(text)
                continue
            v = "t" if i == 1 else f"t^{i}"
            if c == r.one:
                parts.append(v)
            elif text == "-1":
                parts.append(f"-{v}")
            else:
                if " + " in text or " - " in text:
                    text = f"({text})"
                parts.append(f"{text}*{v}")
        if not parts:
            parts.append("0")
        parts.append(f"O(t^{self.precision + 1})")
        out = parts[0]
        for text in parts[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def render_json(self) -> dict:
        return {
            "precision": self.precision,
            "coeffs": [self.ring.render(c) for c in self.coeffs],
        }
