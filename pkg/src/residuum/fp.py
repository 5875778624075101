"""Prime fields F_p and the quadratic-residue machinery built on them.

Everything is exact integer arithmetic. A PrimeContext is immutable after
construction and safe to share between threads; all operations are pure.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .errors import (
    BadPrimeForm,
    ContextMismatch,
    DivisionByZero,
    NonResidue,
    NotPrime,
)

FORM_TWO = "two"
FORM_1_MOD_4 = "one_mod_four"
FORM_3_MOD_4 = "three_mod_four"


def is_prime(n: int) -> bool:
    """Deterministic trial division; exact, intended for n up to ~10**12."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    composite = bytearray(n + 1)
    for q in range(2, isqrt(n) + 1):
        if not composite[q]:
            step = len(range(q * q, n + 1, q))
            composite[q * q :: q] = b"\x01" * step
    return [k for k in range(2, n + 1) if not composite[k]]


def _sqrt_int(a: int, p: int) -> int:
    """Smaller square root of a mod p (Tonelli-Shanks).

    The caller must ensure a is 0 or a quadratic residue.
    """
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # factor p - 1 as q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


class PrimeContext:
    """A prime modulus p with its derived residue tables and special roots.

    qr_set holds the nonzero quadratic residues in ascending order. w is the
    smaller element of order 4 (present iff p = 1 mod 4); tau is the smaller
    square root of 2 (present iff p = 2 or p = +-1 mod 8). Where two roots
    exist we always pick the representative in [0, (p-1)/2] so that outputs
    are reproducible.
    """

    __slots__ = ("p", "residue_form", "qr_set", "w", "tau", "_members")

    def __init__(self, p: int):
        if p < 2 or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        if p == 2:
            self.residue_form = FORM_TWO
        elif p % 4 == 1:
            self.residue_form = FORM_1_MOD_4
        else:
            self.residue_form = FORM_3_MOD_4
        self.qr_set = tuple(sorted({n * n % p for n in range(1, p)}))
        self._members = frozenset(self.qr_set)
        self.w = FieldElement(_sqrt_int(p - 1, p), self) if p % 4 == 1 else None
        if p == 2:
            # 2 = 0 in F_2; its only root is 0
            self.tau = FieldElement(0, self)
        elif p % 8 in (1, 7):
            self.tau = FieldElement(_sqrt_int(2, p), self)
        else:
            self.tau = None

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def is_qr(self, value: int) -> bool:
        """True iff value reduces to a nonzero quadratic residue."""
        return value % self.p in self._members

    def is_square(self, value: int) -> bool:
        """True iff value reduces to zero or a quadratic residue."""
        value %= self.p
        return value == 0 or value in self._members

    def __eq__(self, other):
        return isinstance(other, PrimeContext) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"PrimeContext(p={self.p})"


class FieldElement:
    """Canonical residue in [0, p-1] tied to a PrimeContext.

    Arithmetic mixes freely with plain ints; mixing elements of different
    contexts raises ContextMismatch.
    """

    __slots__ = ("value", "context")

    def __init__(self, value: int, context: PrimeContext):
        if not isinstance(value, int):
            raise TypeError(f"field elements hold ints, not {type(value).__name__}")
        self.value = value % context.p
        self.context = context

    def _other_value(self, other):
        if isinstance(other, FieldElement):
            if other.context.p != self.context.p:
                raise ContextMismatch(
                    f"cannot mix F_{self.context.p} and F_{other.context.p} elements"
                )
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value + v, self.context)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value - v, self.context)

    def __rsub__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FieldElement(v - self.value, self.context)

    def __mul__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value * v, self.context)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return self * inv(FieldElement(v, self.context))

    def __rtruediv__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FieldElement(v, self.context) * inv(self)

    def __neg__(self):
        return FieldElement(-self.value, self.context)

    def __pow__(self, exponent: int):
        try:
            return FieldElement(pow(self.value, exponent, self.context.p), self.context)
        except ValueError:
            raise DivisionByZero("0 has no inverse") from None

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.context.p == self.context.p and other.value == self.value
        if isinstance(other, int):
            return self.value == other % self.context.p
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.context.p})"


@lru_cache(maxsize=None)
def make_context(p: int) -> PrimeContext:
    """Build (and memoize) the residue machinery for a prime modulus."""
    return PrimeContext(p)


def legendre(a: FieldElement) -> int:
    """Quadratic character of a via Euler's criterion: 0, 1 or -1."""
    p = a.context.p
    if p == 2:
        raise BadPrimeForm("the quadratic character needs an odd prime modulus")
    if a.value == 0:
        return 0
    return -1 if pow(a.value, (p - 1) // 2, p) == p - 1 else 1


def sqrt_mod(a: FieldElement) -> FieldElement:
    """Canonical (smaller) square root of a; NonResidue when none exists."""
    ctx = a.context
    if ctx.p == 2 or a.value == 0:
        return FieldElement(a.value, ctx)
    if legendre(a) == -1:
        raise NonResidue(f"{a.value} is not a square mod {ctx.p}")
    return FieldElement(_sqrt_int(a.value, ctx.p), ctx)


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; DivisionByZero on 0."""
    if a.value == 0:
        raise DivisionByZero(f"0 has no inverse mod {a.context.p}")
    return FieldElement(pow(a.value, -1, a.context.p), a.context)
