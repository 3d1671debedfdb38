"""Ideal lattice of the integers: n stands for the ideal n*Z.

Payload: a non-negative integer; 0 is the bottom (zero ideal), 1 the top.
Containment n*Z <= m*Z is divisibility m | n, the product is the integer
product, join is gcd, meet is lcm, and (y : x) = y / gcd(x, y).  Every
element is principal and compact; the maximal elements are the primes.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Any, Optional

from ..core import BackendDescriptor, Element, LatticeBackend, SampleFrame
from ..errors import ParseError, UnsupportedQueryError


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def p_adic_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class DedekindIntBackend(LatticeBackend):
    id = "dedekind-int"
    descriptor = BackendDescriptor(
        id="dedekind-int",
        description="ideal lattice of the rational integers",
        local=False, valuation=False, dedekind=True, divisorial=True,
        prufer=True, integrally_closed=True,
        completely_integrally_closed=True, h_local=True,
    )

    def bottom(self) -> Element:
        return self.make(0)

    def top(self) -> Element:
        return self.make(1)

    def _leq(self, x: Any, y: Any) -> bool:
        if x == 0:
            return True
        if y == 0:
            return False
        return x % y == 0

    def _mul(self, x: Any, y: Any) -> Any:
        return x * y

    def _join2(self, x: Any, y: Any) -> Any:
        return gcd(x, y)

    def _meet2(self, x: Any, y: Any) -> Any:
        return lcm(x, y)

    def _residual(self, y: Any, x: Any) -> Any:
        if x == 0:
            return 1
        if y == 0:
            return 0
        return y // gcd(x, y)

    def is_principal(self, x: Element) -> bool:
        self._check(x)
        return True

    def is_compact(self, x: Element) -> bool:
        self._check(x)
        return True

    def is_prime(self, p: Element) -> bool:
        self._check(p)
        return p.payload == 0 or is_prime_int(p.payload)

    def is_maximal(self, p: Element) -> bool:
        self._check(p)
        return is_prime_int(p.payload)

    def maximals_above(self, a: Element) -> list[Element]:
        self._check(a)
        n = a.payload
        if n == 1:
            return []
        if n == 0:
            raise UnsupportedQueryError(
                "every prime lies above the zero ideal")
        return [self.make(p) for p in prime_factors(n)]

    def enumerate_frame(self, frame: SampleFrame) -> list[Element]:
        return [self.make(n) for n in range(frame.max_int + 1)]

    def principal_elements(self, frame: SampleFrame) -> list[Element]:
        return [self.make(n) for n in range(1, frame.max_int + 1)]

    def _principal_below_fallback(self, a: Element) -> Optional[Element]:
        return a

    def parse(self, text: str) -> Element:
        text = text.strip()
        if not text.isdigit():
            raise ParseError(f"bad dedekind-int literal: {text!r}")
        return self.make(int(text))

    def format(self, x: Element) -> str:
        self._check(x)
        return str(x.payload)
