"""Ideal lattice of a local quadratic order with three conjugate degree-one
ideals a, b, c satisfying a^2 = b*c, b^2 = a*c, c^2 = a*b and a maximal
ideal m with m^2 = a*m = b*m = c*m.

Every monomial in a, b, c normalizes to degree n and a tag in Z/3
(a -> 0, b -> 1, c -> 2, tags add under multiplication), so the principal
elements are P(n, t) for n >= 1 plus the top P(0, 0); the nonprincipal
elements are the levels M(k) = a^k * m.  With the rank
    rank(P(n, .)) = 2n,   rank(M(k)) = 2k + 1
the lattice order is: strictly smaller rank lies strictly above, and the
three distinct principals of one degree are pairwise incomparable.  Their
join is M(n - 1) and their pairwise meet is M(n).

Payload: None (bottom), ("P", n, t) or ("M", k).  The residual table below
was derived by joining {z : z*x <= y} rank by rank and is cross-checked
against the monoid brute-force oracle in latdom.backends.oracles.
"""

from __future__ import annotations

import re
from typing import Any, Optional

from ..core import BackendDescriptor, Element, LatticeBackend, SampleFrame
from ..errors import ParseError

_TAG_NAMES = "abc"
_FACTOR = re.compile(r"\s*([abcm])(?:\^(\d+))?")


def _rank(p: Any) -> int:
    if p[0] == "P":
        return 2 * p[1]
    return 2 * p[1] + 1


class Ex17Backend(LatticeBackend):
    id = "example17"
    descriptor = BackendDescriptor(
        id="example17",
        description="ideal lattice of a local quadratic order",
        local=True, valuation=False, dedekind=False, divisorial=True,
        prufer=False, integrally_closed=False,
        completely_integrally_closed=False, h_local=True,
    )

    def bottom(self) -> Element:
        return self.make(None)

    def top(self) -> Element:
        return self.make(("P", 0, 0))

    def maximal(self) -> Element:
        return self.make(("M", 0))

    def principal(self, n: int, t: int) -> Element:
        if n == 0 and t % 3 != 0:
            raise ValueError("degree 0 carries no tag")
        return self.make(("P", n, t % 3))

    def level(self, k: int) -> Element:
        return self.make(("M", k))

    def _leq(self, x: Any, y: Any) -> bool:
        if x is None:
            return True
        if y is None:
            return False
        if x == y:
            return True
        return _rank(x) > _rank(y)

    def _mul(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        if x[0] == "P" and y[0] == "P":
            return ("P", x[1] + y[1], (x[2] + y[2]) % 3)
        if x[0] == "P":
            return ("M", x[1] + y[1])
        if y[0] == "P":
            return ("M", x[1] + y[1])
        return ("M", x[1] + y[1] + 1)

    def _join2(self, x: Any, y: Any) -> Any:
        if x is None:
            return y
        if y is None:
            return x
        if self._leq(x, y):
            return y
        if self._leq(y, x):
            return x
        # distinct principals of equal degree
        return ("M", x[1] - 1)

    def _meet2(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        if self._leq(x, y):
            return x
        if self._leq(y, x):
            return y
        return ("M", x[1])

    def _residual(self, y: Any, x: Any) -> Any:
        if x is None:
            return ("P", 0, 0)
        if y is None:
            return None
        if y[0] == "P":
            q, t = y[1], y[2]
            if x[0] == "P":
                p, s = x[1], x[2]
                if q > p:
                    return ("P", q - p, (t - s) % 3)
                if q < p or s == t:
                    return ("P", 0, 0)
                return ("M", 0)
            j = x[1]
            if j >= q:
                return ("P", 0, 0)
            return ("M", q - j - 1)
        q = y[1]
        if x[0] == "P":
            p = x[1]
            if p > q:
                return ("P", 0, 0)
            return ("M", q - p)
        j = x[1]
        if j >= q:
            return ("P", 0, 0)
        return ("M", q - j - 1)

    def is_principal(self, x: Element) -> bool:
        self._check(x)
        return x.payload is None or x.payload[0] == "P"

    def is_compact(self, x: Element) -> bool:
        self._check(x)
        return True

    def is_prime(self, p: Element) -> bool:
        self._check(p)
        return p.payload is None or p.payload == ("M", 0)

    def is_maximal(self, p: Element) -> bool:
        self._check(p)
        return p.payload == ("M", 0)

    def maximals_above(self, a: Element) -> list[Element]:
        self._check(a)
        if self.is_top(a):
            return []
        return [self.maximal()]

    def enumerate_frame(self, frame: SampleFrame) -> list[Element]:
        out = [self.bottom(), self.top()]
        for n in range(frame.max_deg + 1):
            out.append(self.level(n))
            if n + 1 <= frame.max_deg:
                for t in range(3):
                    out.append(self.principal(n + 1, t))
        return out

    def principal_elements(self, frame: SampleFrame) -> list[Element]:
        out = [self.top()]
        for n in range(1, frame.max_deg + 1):
            for t in range(3):
                out.append(self.principal(n, t))
        return out

    def _principal_below_fallback(self, a: Element) -> Optional[Element]:
        if a.payload[0] == "P":
            return a
        return self.principal(a.payload[1] + 1, 0)

    def parse(self, text: str) -> Element:
        stripped = text.strip()
        if stripped == "0":
            return self.bottom()
        if stripped == "1":
            return self.top()
        degree = 0
        tag = 0
        saw_m = False
        pos = 0
        while pos < len(stripped):
            m = _FACTOR.match(stripped, pos)
            if not m:
                raise ParseError(f"bad example17 literal: {text!r}")
            sym, exp = m.group(1), int(m.group(2) or 1)
            if saw_m:
                raise ParseError(f"m must come last: {text!r}")
            if sym == "m":
                if exp != 1 or m.group(2) is not None:
                    raise ParseError(f"m takes no exponent: {text!r}")
                saw_m = True
            else:
                degree += exp
                tag += _TAG_NAMES.index(sym) * exp
            pos = m.end()
        if saw_m:
            return self.level(degree)
        if degree == 0:
            raise ParseError(f"bad example17 literal: {text!r}")
        return self.principal(degree, tag)

    def format(self, x: Element) -> str:
        self._check(x)
        p = x.payload
        if p is None:
            return "0"
        if p == ("P", 0, 0):
            return "1"
        if p[0] == "M":
            k = p[1]
            if k == 0:
                return "m"
            head = "a" if k == 1 else f"a^{k}"
            return f"{head} m"
        n, t = p[1], p[2]
        if t == 0:
            return "a" if n == 1 else f"a^{n}"
        letter = _TAG_NAMES[t]
        if n == 1:
            return letter
        head = "a" if n == 2 else f"a^{n - 1}"
        return f"{head} {letter}"
