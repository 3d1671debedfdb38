"""Valuation lattice with value group Q: ideals are rational cuts.

A nonzero element is the up-closed value set {v >= q} (closed cut) or
{v > q} (open cut) for a rational q >= 0; the payload is (q, kind) with
kind "closed" or "open", and None is the bottom (zero ideal).  The top is
the closed cut at 0; the maximal element m is the open cut at 0 and is not
principal, while every closed cut is principal and compact.

Closed forms (on value sets):
  order        x <= y  iff  set(x) is a subset of set(y)
  product      adds cut values; open unless both operands are closed
  join / meet  set union / intersection
  residual     (y : x) = largest up-set A with A + set(x) inside set(y)
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Optional

from ..core import BackendDescriptor, Element, LatticeBackend, SampleFrame
from ..errors import ParseError

CLOSED = "closed"
OPEN = "open"

_LITERAL = re.compile(r"([\[(])(\d+)(?:/(\d+))?([\])])$")


def frame_values(frame: SampleFrame) -> list[Fraction]:
    """All p/q with p <= max_num, q <= max_den, ascending, duplicate-free."""
    vals = {Fraction(p, q)
            for q in range(1, frame.max_den + 1)
            for p in range(frame.max_num + 1)}
    return sorted(vals)


class RatValBackend(LatticeBackend):
    id = "ratval"
    descriptor = BackendDescriptor(
        id="ratval",
        description="rank-one valuation lattice with dense value group",
        local=True, valuation=True, dedekind=False, divisorial=False,
        prufer=True, integrally_closed=True,
        completely_integrally_closed=True, h_local=True,
    )

    def bottom(self) -> Element:
        return self.make(None)

    def top(self) -> Element:
        return self.make((Fraction(0), CLOSED))

    def maximal(self) -> Element:
        return self.make((Fraction(0), OPEN))

    def _leq(self, x: Any, y: Any) -> bool:
        if x is None:
            return True
        if y is None:
            return False
        (qx, kx), (qy, ky) = x, y
        if qx != qy:
            return qx > qy
        return not (kx == CLOSED and ky == OPEN)

    def _mul(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        (qx, kx), (qy, ky) = x, y
        kind = CLOSED if (kx == CLOSED and ky == CLOSED) else OPEN
        return (qx + qy, kind)

    def _join2(self, x: Any, y: Any) -> Any:
        if x is None:
            return y
        if y is None:
            return x
        return x if self._leq(y, x) else y

    def _meet2(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        return x if self._leq(x, y) else y

    def _residual(self, y: Any, x: Any) -> Any:
        if x is None:
            return (Fraction(0), CLOSED)
        if y is None:
            return None
        (r, ky), (q, kx) = y, x
        if kx == OPEN or ky == CLOSED:
            return (max(r - q, Fraction(0)), CLOSED)
        # x closed, y open
        if r < q:
            return (Fraction(0), CLOSED)
        return (r - q, OPEN)

    def is_principal(self, x: Element) -> bool:
        self._check(x)
        return x.payload is None or x.payload[1] == CLOSED

    def is_compact(self, x: Element) -> bool:
        self._check(x)
        return x.payload is None or x.payload[1] == CLOSED

    def is_prime(self, p: Element) -> bool:
        self._check(p)
        return p.payload is None or p == self.maximal()

    def is_maximal(self, p: Element) -> bool:
        self._check(p)
        return p == self.maximal()

    def maximals_above(self, a: Element) -> list[Element]:
        self._check(a)
        if self.is_top(a):
            return []
        return [self.maximal()]

    def enumerate_frame(self, frame: SampleFrame) -> list[Element]:
        out = [self.bottom()]
        for v in frame_values(frame):
            out.append(self.make((v, CLOSED)))
            out.append(self.make((v, OPEN)))
        return out

    def principal_elements(self, frame: SampleFrame) -> list[Element]:
        return [self.make((v, CLOSED)) for v in frame_values(frame)]

    def _principal_below_fallback(self, a: Element) -> Optional[Element]:
        q, kind = a.payload
        if kind == CLOSED:
            return a
        return self.make((q + Fraction(1, q.denominator), CLOSED))

    def parse(self, text: str) -> Element:
        text = text.strip()
        if text == "0":
            return self.bottom()
        if text == "1":
            return self.top()
        m = _LITERAL.match(text)
        if m:
            bra, p, q, ket = m.groups()
            if (bra, ket) in (("[", "]"), ("(", ")")):
                den = int(q) if q else 1
                if den == 0:
                    raise ParseError(f"zero denominator: {text!r}")
                value = Fraction(int(p), den)
                kind = CLOSED if bra == "[" else OPEN
                return self.make((value, kind))
        raise ParseError(f"bad ratval literal: {text!r}")

    def format(self, x: Element) -> str:
        self._check(x)
        if x.payload is None:
            return "0"
        if x == self.top():
            return "1"
        q, kind = x.payload
        digits = str(q.numerator) if q.denominator == 1 \
            else f"{q.numerator}/{q.denominator}"
        return f"[{digits}]" if kind == CLOSED else f"({digits})"
