"""Discrete valuation chain: 1 = m^0 > m^1 > m^2 > ... > 0.

Payload: the exponent k >= 0, or None for the bottom element.  The product
adds exponents (bottom is absorbing) and the order reverses exponent size,
so join takes the minimum exponent and meet the maximum.  Every element is
principal and compact; the unique maximal element is m^1.
"""

from __future__ import annotations

import re
from typing import Any, Optional

from ..core import BackendDescriptor, Element, LatticeBackend, SampleFrame
from ..errors import ParseError

_LITERAL = re.compile(r"m\^(\d+)$")


class DvrChainBackend(LatticeBackend):
    id = "dvr-chain"
    descriptor = BackendDescriptor(
        id="dvr-chain",
        description="discrete valuation chain m^k with principal maximal m",
        local=True, valuation=True, dedekind=True, divisorial=True,
        prufer=True, integrally_closed=True,
        completely_integrally_closed=True, h_local=True,
    )

    def bottom(self) -> Element:
        return self.make(None)

    def top(self) -> Element:
        return self.make(0)

    def _leq(self, x: Any, y: Any) -> bool:
        if x is None:
            return True
        if y is None:
            return False
        return x >= y

    def _mul(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        return x + y

    def _join2(self, x: Any, y: Any) -> Any:
        if x is None:
            return y
        if y is None:
            return x
        return min(x, y)

    def _meet2(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        return max(x, y)

    def _residual(self, y: Any, x: Any) -> Any:
        if x is None:
            return 0
        if y is None:
            return None
        return max(y - x, 0)

    def is_principal(self, x: Element) -> bool:
        self._check(x)
        return True

    def is_compact(self, x: Element) -> bool:
        self._check(x)
        return True

    def is_prime(self, p: Element) -> bool:
        self._check(p)
        return p.payload is None or p.payload == 1

    def is_maximal(self, p: Element) -> bool:
        self._check(p)
        return p.payload == 1

    def maximals_above(self, a: Element) -> list[Element]:
        self._check(a)
        if self.is_top(a):
            return []
        return [self.make(1)]

    def enumerate_frame(self, frame: SampleFrame) -> list[Element]:
        return [self.bottom()] + [self.make(k)
                                  for k in range(frame.max_exp + 1)]

    def principal_elements(self, frame: SampleFrame) -> list[Element]:
        return [self.make(k) for k in range(frame.max_exp + 1)]

    def _principal_below_fallback(self, a: Element) -> Optional[Element]:
        return a

    def parse(self, text: str) -> Element:
        text = text.strip()
        if text == "0":
            return self.bottom()
        if text == "1":
            return self.top()
        m = _LITERAL.match(text)
        if m:
            k = int(m.group(1))
            if k >= 1:
                return self.make(k)
        raise ParseError(f"bad dvr-chain literal: {text!r}")

    def format(self, x: Element) -> str:
        self._check(x)
        if x.payload is None:
            return "0"
        if x.payload == 0:
            return "1"
        return f"m^{x.payload}"
