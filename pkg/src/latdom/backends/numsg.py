"""Ideal lattice of the semiring of non-negative integers.

A nonzero ideal is d*S for a scale d >= 1 and a numerical semigroup S
(co-finite additive submonoid of N with gcd 1); the ideal is principal
exactly when S = N.  Payload: None for the zero ideal, else (d, gaps)
with gaps the finite gap set of S, which pins a unique canonical form.

Membership is a closed form: x belongs to d*S iff x == 0, or d | x and
x/d is not a gap.  Containment and the residual quantify over the finite
ideal generating set d * mingens(S).  Products, joins and meets are
computed as bounded bit sets and the canonical (d, gaps) form is read
back; a computation is accepted only when reconstruction agrees at two
consecutive doublings of the bound.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import gcd, lcm
from typing import Any, Optional

from ..core import BackendDescriptor, Element, LatticeBackend, SampleFrame
from ..errors import FrameInsufficientError, ParseError
from .dedekind import is_prime_int

_IDEAL_RE = re.compile(r"(\d+)\*<(\d+(?:,\d+)*)>$")
_INVALID = object()

_MAX_ENUM_FROB = 18  # subset enumeration of gap sets is exponential in this


def _valid_gaps(gaps: frozenset[int]) -> bool:
    """Is N minus `gaps` closed under addition."""
    for g in gaps:
        for u in range(1, g // 2 + 1):
            if u not in gaps and (g - u) not in gaps:
                return False
    return True


@lru_cache(maxsize=None)
def gap_sets_up_to(max_frob: int) -> tuple[frozenset[int], ...]:
    """All gap sets of numerical semigroups with every gap <= max_frob,
    ordered by (size, sorted gaps).  Includes the empty set (S = N)."""
    if max_frob > _MAX_ENUM_FROB:
        raise FrameInsufficientError(
            f"gap-set enumeration requested above max_frob="
            f"{_MAX_ENUM_FROB}; use principal_elements for probes")
    found = []
    for bits in range(1 << max_frob):
        gaps = frozenset(g for g in range(1, max_frob + 1)
                         if bits >> (g - 1) & 1)
        if _valid_gaps(gaps):
            found.append(gaps)
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


@lru_cache(maxsize=None)
def mingens(gaps: frozenset[int]) -> tuple[int, ...]:
    """Minimal additive generators of the semigroup with this gap set."""
    if not gaps:
        return (1,)
    frob = max(gaps)
    smallest = next(s for s in range(1, frob + 2) if s not in gaps)
    members = {s for s in range(1, frob + smallest + 1) if s not in gaps}
    out = []
    for s in sorted(members):
        if not any(u in members and (s - u) in members
                   for u in range(1, s // 2 + 1)):
            out.append(s)
    return tuple(out)


def _closure_mask(gens: tuple[int, ...], bound: int) -> int:
    """Bit set of the additive monoid generated by `gens`, up to `bound`."""
    full = (1 << (bound + 1)) - 1
    acc = 1
    while True:
        prev = acc
        for g in gens:
            if g > bound:
                continue
            step = g
            while step <= bound:
                acc |= (acc << step) & full
                step <<= 1
        if acc == prev:
            return acc


def _mask_bits(mask: int, bound: int) -> list[int]:
    return [i for i in range(1, bound + 1) if mask >> i & 1]


class NumSgBackend(LatticeBackend):
    id = "numsg"
    descriptor = BackendDescriptor(
        id="numsg",
        description="ideal lattice of the multiplicative semiring N",
        local=True, valuation=False, dedekind=False, divisorial=False,
        prufer=False, integrally_closed=True,
        completely_integrally_closed=True, h_local=True,
    )

    def __init__(self) -> None:
        self._op_cache: dict[tuple, Any] = {}

    # -- payload helpers ----------------------------------------------------

    @staticmethod
    def member(payload: Any, x: int) -> bool:
        if x == 0:
            return True
        if payload is None:
            return False
        d, gaps = payload
        return x % d == 0 and (x // d) not in gaps

    @staticmethod
    def ideal_gens(payload: Any) -> tuple[int, ...]:
        d, gaps = payload
        return tuple(d * g for g in mingens(gaps))

    @staticmethod
    def _stabilization(payload: Any) -> int:
        """Index from which the ideal is exactly its arithmetic tail."""
        d, gaps = payload
        return d * (max(gaps) + 1) if gaps else d

    def _materialize(self, payload: Any, bound: int) -> int:
        acc = 1
        for x in range(1, bound + 1):
            if self.member(payload, x):
                acc |= 1 << x
        return acc

    def _reconstruct(self, mask: int, bound: int) -> Any:
        xs = _mask_bits(mask, bound)
        if not xs:
            return _INVALID
        d = 0
        for x in xs:
            d = gcd(d, x)
        ks = {x // d for x in xs}
        top_k = bound // d
        gaps = frozenset(k for k in range(1, top_k + 1) if k not in ks)
        if gaps and max(gaps) > top_k // 2:
            return _INVALID  # gap set may be truncated by the bound
        if not _valid_gaps(gaps):
            return _INVALID
        payload = (d, gaps)
        if self._materialize(payload, bound) != mask:
            return _INVALID
        return payload

    def _stable(self, compute, bound0: int, cap: int = 10) -> Any:
        """Accept a bounded computation once reconstruction agrees at two
        consecutive doublings of the bound."""
        bound = max(bound0, 32)
        prev = self._reconstruct(compute(bound), bound)
        for _ in range(cap):
            bound *= 2
            cur = self._reconstruct(compute(bound), bound)
            if cur is not _INVALID and cur == prev:
                return cur
            prev = cur
        raise FrameInsufficientError(
            "semigroup ideal computation did not stabilize")

    # -- distinguished elements ----------------------------------------------

    def bottom(self) -> Element:
        return self.make(None)

    def top(self) -> Element:
        return self.make((1, frozenset()))

    def maximal(self) -> Element:
        return self.make((1, frozenset({1})))

    def ideal(self, d: int, gaps) -> Element:
        gaps = frozenset(gaps)
        if d < 1 or not _valid_gaps(gaps) or any(g < 1 for g in gaps):
            raise ValueError(f"not a canonical semigroup ideal: {d}, {gaps}")
        return self.make((d, gaps))

    # -- primitive operations --------------------------------------------------

    def _leq(self, x: Any, y: Any) -> bool:
        if x is None:
            return True
        if y is None:
            return False
        return all(self.member(y, g) for g in self.ideal_gens(x))

    def _mul(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        key = ("mul",) + tuple(sorted((x, y)))
        if key not in self._op_cache:
            gens = tuple(sorted({gx * gy
                                 for gx in self.ideal_gens(x)
                                 for gy in self.ideal_gens(y)}))
            b0 = 2 * (self._stabilization(x) + self._stabilization(y)) + 4
            self._op_cache[key] = self._stable(
                lambda b: _closure_mask(gens, b), b0)
        return self._op_cache[key]

    def _join2(self, x: Any, y: Any) -> Any:
        if x is None:
            return y
        if y is None:
            return x
        key = ("join",) + tuple(sorted((x, y)))
        if key not in self._op_cache:
            gens = tuple(sorted(set(self.ideal_gens(x))
                                | set(self.ideal_gens(y))))
            b0 = 2 * (self._stabilization(x) + self._stabilization(y)) + 4
            self._op_cache[key] = self._stable(
                lambda b: _closure_mask(gens, b), b0)
        return self._op_cache[key]

    def _meet2(self, x: Any, y: Any) -> Any:
        if x is None or y is None:
            return None
        key = ("meet",) + tuple(sorted((x, y)))
        if key not in self._op_cache:
            def compute(bound: int) -> int:
                acc = 1
                for t in range(1, bound + 1):
                    if self.member(x, t) and self.member(y, t):
                        acc |= 1 << t
                return acc
            b0 = 2 * (self._stabilization(x) + self._stabilization(y)
                      + lcm(x[0], y[0])) + 4
            self._op_cache[key] = self._stable(compute, b0)
        return self._op_cache[key]

    def _residual(self, y: Any, x: Any) -> Any:
        if x is None:
            return (1, frozenset())
        if y is None:
            return None
        key = ("res", y, x)
        if key not in self._op_cache:
            gens = self.ideal_gens(x)

            def compute(bound: int) -> int:
                acc = 1
                for t in range(1, bound + 1):
                    if all(self.member(y, t * g) for g in gens):
                        acc |= 1 << t
                return acc
            b0 = 2 * (self._stabilization(x) + self._stabilization(y)) + 4
            self._op_cache[key] = self._stable(compute, b0)
        return self._op_cache[key]

    # -- structural predicates ---------------------------------------------------

    def is_principal(self, x: Element) -> bool:
        self._check(x)
        return x.payload is None or not x.payload[1]

    def is_compact(self, x: Element) -> bool:
        self._check(x)
        return True

    def is_prime(self, p: Element) -> bool:
        self._check(p)
        if p.payload is None:
            return True
        d, gaps = p.payload
        if not gaps:
            return is_prime_int(d)
        return d == 1 and gaps == frozenset({1})

    def is_maximal(self, p: Element) -> bool:
        self._check(p)
        return p.payload == (1, frozenset({1}))

    def maximals_above(self, a: Element) -> list[Element]:
        self._check(a)
        if self.is_top(a):
            return []
        return [self.maximal()]

    # -- frames ---------------------------------------------------------------------

    def enumerate_frame(self, frame: SampleFrame) -> list[Element]:
        out = [self.bottom()]
        for d in range(1, frame.max_scale + 1):
            for gaps in gap_sets_up_to(frame.max_frob):
                out.append(self.make((d, gaps)))
        out.sort(key=lambda e: (0,) if e.payload is None else
                 (1, e.payload[0], len(e.payload[1]), sorted(e.payload[1])))
        return out

    def principal_elements(self, frame: SampleFrame) -> list[Element]:
        return [self.make((d, frozenset()))
                for d in range(1, frame.max_scale + 1)]

    def _principal_below_fallback(self, a: Element) -> Optional[Element]:
        d, gaps = a.payload
        smallest = mingens(gaps)[0]
        return self.make((d * smallest, frozenset()))

    # -- literals --------------------------------------------------------------------

    def parse(self, text: str) -> Element:
        text = text.strip()
        if text == "0":
            return self.bottom()
        m = _IDEAL_RE.match(text)
        if not m:
            raise ParseError(f"bad numsg literal: {text!r}")
        d = int(m.group(1))
        gens = sorted({int(g) for g in m.group(2).split(",")})
        if d < 1 or any(g < 1 for g in gens):
            raise ParseError(f"bad numsg literal: {text!r}")
        g0 = 0
        for g in gens:
            g0 = gcd(g0, g)
        if g0 != 1:
            raise ParseError(
                f"generators must span a gcd-1 semigroup: {text!r}")
        bound = max(gens) * max(gens) + max(gens) + 1
        mask = _closure_mask(tuple(gens), bound)
        ks = set(_mask_bits(mask, bound))
        gaps = frozenset(k for k in range(1, max(gens) * max(gens) + 1)
                         if k not in ks)
        return self.make((d, gaps))

    def format(self, x: Element) -> str:
        self._check(x)
        if x.payload is None:
            return "0"
        d, gaps = x.payload
        return f"{d}*<{','.join(str(g) for g in mingens(gaps))}>"
