"""Abstract multiplicative-lattice contract.

Every backend models a complete multiplicative lattice: a bounded partial
order (bottom 0, top 1) carrying a commutative monoid product with identity
1 that distributes over joins, together with the residual (y : x) =
join of all a with a*x <= y.  Elements are immutable values in a canonical
form, so structural equality of payloads is lattice equality.

Bounded verification quantifies over a SampleFrame: a finite, deterministic,
duplicate-free enumeration that always contains 0 and 1.  A Verdict records
the outcome of one bounded check; "holds-on-frame" is weaker than a proof,
"fails" is a genuine refutation carrying a replayable witness.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Iterable, Optional, Sequence

from .errors import BackendMismatchError, FrameInsufficientError


@dataclass(frozen=True)
class Element:
    """A backend-tagged symbolic lattice element in canonical form."""

    backend: str
    payload: Any

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Element({self.backend!r}, {self.payload!r})"


@dataclass(frozen=True)
class SampleFrame:
    """Deterministic enumeration bounds for bounded checks.

    Each backend reads only the bounds that concern it.  Enlarging any
    bound yields a superset enumeration.
    """

    max_exp: int = 20      # chain: exponents 0..max_exp
    max_int: int = 200     # integer lattice: 0..max_int
    max_num: int = 10      # rational cuts: numerators
    max_den: int = 6       # rational cuts: denominators
    max_scale: int = 4     # semigroup ideals: scale d
    max_frob: int = 15     # semigroup ideals: largest admissible gap
    max_deg: int = 8       # quadratic order: monomial degree / m-level

    def scaled(self, factor: int = 2) -> "SampleFrame":
        """Multiply every bound by `factor` (used by stability probes)."""
        if factor < 1:
            raise ValueError("scale factor must be >= 1")
        return SampleFrame(
            max_exp=self.max_exp * factor,
            max_int=self.max_int * factor,
            max_num=self.max_num * factor,
            max_den=self.max_den * factor,
            max_scale=self.max_scale * factor,
            max_frob=self.max_frob * factor,
            max_deg=self.max_deg * factor,
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "max_exp": self.max_exp,
            "max_int": self.max_int,
            "max_num": self.max_num,
            "max_den": self.max_den,
            "max_scale": self.max_scale,
            "max_frob": self.max_frob,
            "max_deg": self.max_deg,
        }


#: bounds used by the CI acceptance runs
CI_FRAME = SampleFrame()

#: smaller bounds at which the brute-force backend oracles are affordable
ORACLE_FRAME = SampleFrame(
    max_exp=10, max_int=60, max_num=4, max_den=3,
    max_scale=2, max_frob=11, max_deg=5,
)


class Status(str, Enum):
    HOLDS_ON_FRAME = "holds-on-frame"
    HOLDS_GLOBALLY = "holds-globally"
    FAILS = "fails"
    FRAME_INSUFFICIENT = "frame-insufficient"
    HYPOTHESIS_FAILED = "hypothesis-failed"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class Verdict:
    """Outcome of one bounded property check."""

    status: Status
    witnesses: tuple[tuple[str, Element], ...] = ()
    checked_count: int = 0
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.status in (Status.HOLDS_ON_FRAME, Status.HOLDS_GLOBALLY)

    def witness_dict(self) -> dict[str, Element]:
        return dict(self.witnesses)

    @staticmethod
    def ok(checked: int, note: str = "") -> "Verdict":
        return Verdict(Status.HOLDS_ON_FRAME, (), checked, note)

    @staticmethod
    def fail(witnesses: Sequence[tuple[str, Element]], checked: int,
             note: str = "") -> "Verdict":
        if not witnesses:
            raise ValueError("a failing verdict requires a witness")
        return Verdict(Status.FAILS, tuple(witnesses), checked, note)

    @staticmethod
    def insufficient(note: str = "", checked: int = 0) -> "Verdict":
        return Verdict(Status.FRAME_INSUFFICIENT, (), checked, note)

    @staticmethod
    def skipped(note: str = "", checked: int = 0) -> "Verdict":
        return Verdict(Status.HYPOTHESIS_FAILED, (), checked, note)


@dataclass(frozen=True)
class BackendDescriptor:
    """Identity and closed-form structural metadata of one backend.

    The boolean fields record facts known for the full infinite lattice;
    classification uses them to upgrade frame verdicts, and the test suite
    checks frame verdicts never contradict them.
    """

    id: str
    description: str
    local: bool
    valuation: bool
    dedekind: bool
    divisorial: bool
    prufer: bool
    integrally_closed: bool
    completely_integrally_closed: bool
    h_local: bool


class LatticeBackend(ABC):
    """One exact symbolic lattice with closed-form operations."""

    id: str = ""
    descriptor: BackendDescriptor

    # -- distinguished elements ------------------------------------------

    @abstractmethod
    def bottom(self) -> Element: ...

    @abstractmethod
    def top(self) -> Element: ...

    def is_bottom(self, x: Element) -> bool:
        return x == self.bottom()

    def is_top(self, x: Element) -> bool:
        return x == self.top()

    # -- primitive operations (payload level) ----------------------------

    @abstractmethod
    def _leq(self, x: Any, y: Any) -> bool: ...

    @abstractmethod
    def _mul(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def _join2(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def _meet2(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def _residual(self, y: Any, x: Any) -> Any: ...

    # -- public operations -----------------------------------------------

    def _check(self, *xs: Element) -> None:
        for x in xs:
            if x.backend != self.id:
                raise BackendMismatchError(
                    f"element of backend {x.backend!r} passed to {self.id!r}")

    def make(self, payload: Any) -> Element:
        return Element(self.id, payload)

    def leq(self, x: Element, y: Element) -> bool:
        """Partial order: is x below y."""
        self._check(x, y)
        return self._leq(x.payload, y.payload)

    def lt(self, x: Element, y: Element) -> bool:
        return x != y and self.leq(x, y)

    def mul(self, x: Element, y: Element) -> Element:
        """Commutative monoid product; identity 1, annihilator 0."""
        self._check(x, y)
        return self.make(self._mul(x.payload, y.payload))

    def join(self, xs: Iterable[Element]) -> Element:
        """Least upper bound; the empty join is 0."""
        out = self.bottom()
        for x in xs:
            self._check(x)
            out = self.make(self._join2(out.payload, x.payload))
        return out

    def meet(self, xs: Iterable[Element]) -> Element:
        """Greatest lower bound; the empty meet is 1."""
        out = self.top()
        for x in xs:
            self._check(x)
            out = self.make(self._meet2(out.payload, x.payload))
        return out

    def residual(self, y: Element, x: Element) -> Element:
        """(y : x), the largest a with a*x <= y."""
        self._check(y, x)
        return self.make(self._residual(y.payload, x.payload))

    # -- structural predicates --------------------------------------------

    @abstractmethod
    def is_principal(self, x: Element) -> bool: ...

    @abstractmethod
    def is_compact(self, x: Element) -> bool: ...

    @abstractmethod
    def is_prime(self, p: Element) -> bool: ...

    @abstractmethod
    def is_maximal(self, p: Element) -> bool: ...

    @abstractmethod
    def maximals_above(self, a: Element) -> list[Element]: ...

    # -- frames ------------------------------------------------------------

    @abstractmethod
    def enumerate_frame(self, frame: SampleFrame) -> list[Element]:
        """Deterministic duplicate-free enumeration containing 0 and 1."""

    @abstractmethod
    def principal_elements(self, frame: SampleFrame) -> list[Element]:
        """Nonzero principal elements of the frame, in enumeration order.

        Cheap even when the full enumeration would be large.
        """

    def first_principal_below(self, a: Element,
                              frame: SampleFrame) -> Optional[Element]:
        """First nonzero principal element below `a` in frame order,
        falling back to a deterministic closed form beyond the frame."""
        self._check(a)
        if self.is_bottom(a):
            return None
        for x in self.principal_elements(frame):
            if self.leq(x, a):
                return x
        return self._principal_below_fallback(a)

    def _principal_below_fallback(self, a: Element) -> Optional[Element]:
        """Closed-form nonzero principal below a nonzero `a`, or None."""
        return None

    # -- literals -----------------------------------------------------------

    @abstractmethod
    def parse(self, text: str) -> Element: ...

    @abstractmethod
    def format(self, x: Element) -> str: ...


# ---------------------------------------------------------------------------
# generic derived checks
# ---------------------------------------------------------------------------

def _sample(items: Sequence, cap: int) -> list:
    """Deterministic subsample: evenly strided, endpoints kept."""
    n = len(items)
    if n <= cap or cap <= 0:
        return list(items)
    step = (n + cap - 1) // cap
    picked = list(items[::step])
    if items[-1] not in picked:
        picked.append(items[-1])
    return picked


def check_principal_definition(backend: LatticeBackend, x: Element,
                               frame: SampleFrame,
                               cap: int = 80) -> Verdict:
    """Verify the two defining identities of a principal element over the
    frame:  y /\\ z*x == ((y : x) /\\ z) * x  and
    y \\/ (z : x) == ((y*x \\/ z) : x)  for all frame y, z."""
    backend._check(x)
    elems = _sample(backend.enumerate_frame(frame), cap)
    checked = 0
    for y in elems:
        for z in elems:
            checked += 1
            lhs = backend.meet([y, backend.mul(z, x)])
            rhs = backend.mul(backend.meet([backend.residual(y, x), z]), x)
            if lhs != rhs:
                return Verdict.fail(
                    [("x", x), ("y", y), ("z", z)], checked,
                    "meet-principal identity fails")
            lhs = backend.join([y, backend.residual(z, x)])
            rhs = backend.residual(backend.join([backend.mul(y, x), z]), x)
            if lhs != rhs:
                return Verdict.fail(
                    [("x", x), ("y", y), ("z", z)], checked,
                    "join-principal identity fails")
    return Verdict.ok(checked)


def principal_below(backend: LatticeBackend, a: Element,
                    frame: SampleFrame) -> list[Element]:
    """All nonzero principal frame elements below `a`, in frame order.

    Raises FrameInsufficientError when a != 0 but the frame holds none.
    """
    backend._check(a)
    if backend.is_bottom(a):
        return []
    found = [x for x in backend.principal_elements(frame)
             if backend.leq(x, a)]
    if not found:
        raise FrameInsufficientError(
            f"no nonzero principal element below {backend.format(a)} "
            f"in the frame")
    return found


def _principal_join_reaches(backend: LatticeBackend, a: Element,
                            frame: SampleFrame,
                            max_enlargements: int = 6) -> bool:
    """Does the join of (frame) principal elements below `a` reach `a`,
    allowing the principal supply to grow geometrically."""
    f = frame
    for _ in range(max_enlargements + 1):
        xs = [x for x in backend.principal_elements(f) if backend.leq(x, a)]
        if xs and backend.join(xs) == a:
            return True
        f = f.scaled(2)
    return False


def axioms_suite(backend: LatticeBackend, frame: SampleFrame,
                 pair_cap: int = 70, triple_cap: int = 28) -> Verdict:
    """Bounded sanity check of the lattice axioms on one backend.

    Checks, over deterministic subsamples of the frame: distributivity of
    the product over binary joins, the residual adjunction, primeness of 0
    (no zero divisors), generation by principal elements (join of the
    principal elements below each compact element reaches it; non-compact
    elements are exempt since no finite join can witness them), the
    compactness closed form on the corner elements, and cancellativity of
    nonzero principal elements.
    """
    elems = backend.enumerate_frame(frame)
    bot, top = backend.bottom(), backend.top()
    pairs = _sample(elems, pair_cap)
    triples = _sample(elems, triple_cap)
    checked = 0

    # 0 and 1 present and ordered
    if bot not in elems or top not in elems:
        return Verdict.insufficient("frame must contain 0 and 1")
    for x in pairs:
        checked += 1
        if not (backend.leq(bot, x) and backend.leq(x, top)):
            return Verdict.fail([("x", x)], checked, "bounds violated")

    # product distributes over binary joins
    for a in triples:
        for b in triples:
            for c in triples:
                checked += 1
                lhs = backend.mul(a, backend.join([b, c]))
                rhs = backend.join([backend.mul(a, b), backend.mul(a, c)])
                if lhs != rhs:
                    return Verdict.fail(
                        [("a", a), ("b", b), ("c", c)], checked,
                        "mul does not distribute over join")

    # residual adjunction: a*x <= y  iff  a <= (y : x)
    for a in triples:
        for x in triples:
            for y in triples:
                checked += 1
                if backend.leq(backend.mul(a, x), y) != \
                        backend.leq(a, backend.residual(y, x)):
                    return Verdict.fail(
                        [("a", a), ("x", x), ("y", y)], checked,
                        "residual adjunction fails")

    # 0 is prime: no zero divisors
    for x in pairs:
        for y in pairs:
            checked += 1
            if backend.mul(x, y) == bot and x != bot and y != bot:
                return Verdict.fail([("x", x), ("y", y)], checked,
                                    "zero divisors found")

    # principally generated (witnessable only for compact elements)
    for a in pairs:
        if a == bot:
            continue
        checked += 1
        if backend.is_compact(a):
            if not _principal_join_reaches(backend, a, frame):
                return Verdict.fail(
                    [("a", a)], checked,
                    "compact element is not a finite join of principals")
        else:
            xs = [x for x in backend.principal_elements(frame)
                  if backend.leq(x, a)]
            if xs and not backend.leq(backend.join(xs), a):
                return Verdict.fail(
                    [("a", a)], checked,
                    "join of principals below a escapes a")

    # compactness closed form on the corner elements
    checked += 2
    if not backend.is_compact(bot) or not backend.is_compact(top):
        return Verdict.fail([("bottom", bot), ("top", top)], checked,
                            "0 and 1 must be compact")
    # finite subcover surrogate on sampled covers
    for a in pairs:
        if not backend.is_compact(a):
            continue
        cover = [x for x in pairs if backend.leq(x, a)]
        checked += 1
        if cover and not backend.leq(a, backend.join(cover + [a])):
            return Verdict.fail([("a", a)], checked,
                                "element escapes its own cover")

    # nonzero principal elements cancel
    principals = [x for x in backend.principal_elements(frame)][:12]
    for x in principals:
        for y in triples:
            for z in triples:
                checked += 1
                if backend.mul(x, y) == backend.mul(x, z) and y != z:
                    return Verdict.fail(
                        [("x", x), ("y", y), ("z", z)], checked,
                        "nonzero principal element fails to cancel")

    return Verdict.ok(checked)
