"""Verdicts of identity checks.

Checkers compare two truncated series and report either success at the
shared precision or the first differing coefficient with both values, so a
failure names the exact term that broke.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import TruncSeries


@dataclass(frozen=True)
class Verdict:
    holds: bool
    precision: int
    label: str = ""
    fail_index: int = -1
    lhs_text: str = ""
    rhs_text: str = ""

    def render(self) -> str:
        if self.holds:
            return f"HOLDS (precision {self.precision})"
        return (
            f"FAILS at t^{self.fail_index}: "
            f"lhs={self.lhs_text}, rhs={self.rhs_text}"
        )

    def render_json(self) -> dict:
        out = {"holds": self.holds, "precision": self.precision}
        if self.label:
            out["label"] = self.label
        if not self.holds:
            out["fail_index"] = self.fail_index
            out["lhs"] = self.lhs_text
            out["rhs"] = self.rhs_text
        return out


def compare_series(lhs: TruncSeries, rhs: TruncSeries, label: str = "") -> Verdict:
    lhs.check_compatible(rhs)
    ring = lhs.ring
    for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return Verdict(
                holds=False,
                precision=lhs.precision,
                label=label,
                fail_index=i,
                lhs_text=ring.render(a),
                rhs_text=ring.render(b),
            )
    return Verdict(holds=True, precision=lhs.precision, label=label)


def all_hold(verdicts) -> bool:
    return all(v.holds for v in verdicts)
