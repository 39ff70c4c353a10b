"""Exact arithmetic on eventually constant rational sequences.

Scalars are arbitrary-precision rationals (``fractions.Fraction``): always in
lowest terms, positive denominator, no rounding anywhere.  Sequences are
stored as a finite prefix plus a constant tail value.  That subspace is
closed under addition, scaling, the skew operator and its inverse, and the
duality pairing, and it contains every vector this project manipulates:
finitely supported summable sequences, the all-ones sequence, and the bidual
points produced by the extension construction.  Every identity we certify is
therefore decidable by exact comparison.

Indices are 1-based everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "NonSummable",
    "Seq",
    "ZERO",
    "ONES",
    "rat",
    "rat_str",
    "seq",
    "canonicalize",
    "add",
    "scale",
    "pairing",
    "sup_norm",
    "l1_norm",
    "total_sum",
    "unit",
    "constant",
]

# The one and only scalar type.  Fraction keeps gcd(|p|, q) = 1 and q > 0 by
# construction, and str() round-trips the "p/q" wire format used by the CLI.
Rational = Fraction


class NonSummable(ValueError):
    """An absolutely summable argument was required but the tail is nonzero."""


def rat(value: Rational | int | str) -> Rational:
    """Coerce an int, a "p/q" string, or a Rational to an exact Rational.

    Floats are rejected outright: admitting one would silently trade
    exactness for a binary approximation.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}: exact rationals only")
    return Fraction(value)


def rat_str(value: Rational) -> str:
    """Serialize as "p/q" in lowest terms, or just "p" when q = 1."""
    return str(value)


@dataclass(frozen=True)
class Seq:
    """An eventually constant rational sequence.

    ``prefix`` holds entries 1..len(prefix); every later entry equals
    ``tail``.  Construction canonicalizes (trailing prefix entries equal to
    the tail are absorbed), so structural equality is sequence equality and
    instances are hashable, immutable and safe to share across threads.

    A zero tail means the sequence is finitely supported, hence both
    summable and convergent to zero; a nonzero tail means it is bounded but
    stays away from zero.
    """

    prefix: tuple[Rational, ...] = ()
    tail: Rational = Fraction(0)

    def __post_init__(self) -> None:
        entries = [rat(v) for v in self.prefix]
        t = rat(self.tail)
        while entries and entries[-1] == t:
            entries.pop()
        object.__setattr__(self, "prefix", tuple(entries))
        object.__setattr__(self, "tail", t)

    def entry(self, i: int) -> Rational:
        """Entry at 1-based index ``i``."""
        if i < 1:
            raise IndexError(f"index {i} out of range: indices start at 1")
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    @property
    def finitely_supported(self) -> bool:
        return self.tail == 0

    def __add__(self, other: Seq) -> Seq:
        n = max(len(self.prefix), len(other.prefix))
        return Seq(
            tuple(self.entry(i) + other.entry(i) for i in range(1, n + 1)),
            self.tail + other.tail,
        )

    def __sub__(self, other: Seq) -> Seq:
        return self + (-other)

    def __neg__(self) -> Seq:
        return Seq(tuple(-v for v in self.prefix), -self.tail)

    def __mul__(self, c: Rational | int | str) -> Seq:
        c = rat(c)
        return Seq(tuple(c * v for v in self.prefix), c * self.tail)

    __rmul__ = __mul__

    def __str__(self) -> str:
        shown = [rat_str(v) for v in self.prefix] + [rat_str(self.tail)] * 2
        return "(" + ", ".join(shown) + ", ...)"

    def to_obj(self) -> dict:
        """JSON-ready form with rationals as "p/q" strings."""
        return {
            "prefix": [rat_str(v) for v in self.prefix],
            "tail": rat_str(self.tail),
        }

    @classmethod
    def from_obj(cls, obj: object) -> Seq:
        """Parse ``{"prefix": [...], "tail": ...}``; entries are ints or "p/q" strings.

        Raises ValueError with a field-level message on malformed input.
        """
        if not isinstance(obj, dict):
            raise ValueError("expected an object with 'prefix' and 'tail'")
        unknown = set(obj) - {"prefix", "tail"}
        if unknown:
            raise ValueError(f"unknown keys {sorted(unknown)}")
        raw_prefix = obj.get("prefix", [])
        if not isinstance(raw_prefix, list):
            raise ValueError("'prefix' must be a list")
        entries = []
        for i, item in enumerate(raw_prefix):
            try:
                entries.append(rat(item))
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise ValueError(f"prefix[{i}]: malformed rational {item!r}") from exc
        try:
            t = rat(obj.get("tail", 0))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ValueError(f"tail: malformed rational {obj.get('tail')!r}") from exc
        return cls(tuple(entries), t)


ZERO = Seq()
ONES = Seq((), Fraction(1))


def seq(*entries: Rational | int | str, tail: Rational | int | str = 0) -> Seq:
    """Convenience constructor: ``seq(-1, 1)`` is the sequence (-1, 1, 0, 0, ...)."""
    return Seq(tuple(entries), tail)


def canonicalize(prefix, tail) -> Seq:
    """Canonical sequence with the given entries; absorbs a redundant prefix."""
    return Seq(tuple(prefix), tail)


def add(a: Seq, b: Seq) -> Seq:
    """Entrywise exact sum."""
    return a + b


def scale(c: Rational | int | str, a: Seq) -> Seq:
    """Entrywise exact scalar multiple."""
    return rat(c) * a


def pairing(x: Seq, y: Seq) -> Rational:
    """Duality product sum_i x_i * y_i.

    Defined whenever at least one argument is finitely supported (the sum is
    then finite and exact); symmetric in its arguments.  Raises NonSummable
    when both tails are nonzero, since the series then diverges.
    """
    if y.tail != 0:
        if x.tail != 0:
            raise NonSummable("pairing of two sequences with nonzero tails diverges")
        x, y = y, x
    total = Fraction(0)
    for i, yi in enumerate(y.prefix, start=1):
        total += x.entry(i) * yi
    return total


def sup_norm(a: Seq) -> Rational:
    """max_i |a_i|, attained on the prefix or at the tail."""
    return max([abs(a.tail)] + [abs(v) for v in a.prefix])


def l1_norm(a: Seq) -> Rational:
    """sum_i |a_i|; requires a finitely supported argument."""
    if a.tail != 0:
        raise NonSummable("l1_norm of a sequence with nonzero tail diverges")
    return sum((abs(v) for v in a.prefix), Fraction(0))


def total_sum(a: Seq) -> Rational:
    """sum_i a_i; requires a finitely supported argument."""
    if a.tail != 0:
        raise NonSummable("total_sum of a sequence with nonzero tail diverges")
    return sum(a.prefix, Fraction(0))


def unit(k: int) -> Seq:
    """The k-th coordinate sequence: 1 at index k, 0 elsewhere."""
    if k < 1:
        raise ValueError(f"unit index must be >= 1, got {k}")
    return Seq((Fraction(0),) * (k - 1) + (Fraction(1),))


def constant(c: Rational | int | str) -> Seq:
    """The constant sequence (c, c, c, ...)."""
    return Seq((), rat(c))
