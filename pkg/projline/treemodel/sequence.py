"""
Eventually periodic binary sequences.

Wire format: the preperiod followed by the parenthesized period, for example "10(01)"
for 1 0 0 1 0 1 0 1 ...
"""
import math
import random
import re

from projline.exceptions.all import SequenceSyntaxError

SEQUENCE = re.compile(r"^\s*([01]*)\s*\(\s*([01]+)\s*\)\s*$")

BITS = frozenset("01")


def _primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


class EvPerSeq:
    """
    Infinite binary sequence preperiod + period^∞, always kept in canonical form: the
    period is primitive and the preperiod is as short as possible.

    Example:

    ```py
    xi = EvPerSeq.parse("0(10)")
    str(xi)       # "(01)"
    xi.letter(3)  # "1"
    ```
    """
    __slots__ = ("preperiod", "period")

    def __init__(self, preperiod: str, period: str):
        """
        Raises:
            SequenceSyntaxError: If a word has letters other than 0 and 1, or the
                period is empty.
        """
        if not isinstance(preperiod, str) or not isinstance(period, str):
            raise SequenceSyntaxError(f"Expected binary strings, got {preperiod!r} and {period!r}.")
        if not period:
            raise SequenceSyntaxError("The period of a sequence cannot be empty.")
        if not set(preperiod + period) <= BITS:
            raise SequenceSyntaxError(f"Letters must be 0 or 1, got {preperiod!r} and {period!r}.")

        period = _primitive_root(period)
        while preperiod and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = period[-1] + period[:-1]
        self.preperiod = preperiod
        self.period = period

    @classmethod
    def parse(cls, text: str) -> "EvPerSeq":
        """
        Raises:
            SequenceSyntaxError: If `text` is not of the form "pre(period)".
        """
        match = SEQUENCE.match(text) if isinstance(text, str) else None
        if not match:
            raise SequenceSyntaxError(f"Cannot parse sequence {text!r}, expected e.g. '10(01)'.")
        return cls(match.group(1), match.group(2))

    @classmethod
    def constant(cls, bit: str) -> "EvPerSeq":
        return cls("", bit)

    def format(self) -> str:
        return f"{self.preperiod}({self.period})"

    __str__ = format

    def to_json(self) -> str:
        return self.format()

    def letter(self, i: int) -> str:
        if i < 0:
            raise IndexError(i)
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def head(self, n: int) -> str:
        """The first n letters."""
        return "".join(self.letter(i) for i in range(n))

    def drop(self, n: int) -> "EvPerSeq":
        """The suffix starting at letter n."""
        if n <= len(self.preperiod):
            return EvPerSeq(self.preperiod[n:], self.period)
        k = (n - len(self.preperiod)) % len(self.period)
        return EvPerSeq("", self.period[k:] + self.period[:k])

    def prepend(self, word: str) -> "EvPerSeq":
        return EvPerSeq(word + self.preperiod, self.period)

    def startswith(self, word: str) -> bool:
        return all(self.letter(i) == bit for i, bit in enumerate(word))

    def __len__(self):
        """Length of the representation, not of the sequence."""
        return len(self.preperiod) + len(self.period)

    def __eq__(self, other):
        if not isinstance(other, EvPerSeq):
            return NotImplemented
        return self.preperiod == other.preperiod and self.period == other.period

    def __hash__(self):
        return hash(("EvPerSeq", self.preperiod, self.period))

    def __repr__(self):
        return f"EvPerSeq({self.format()!r})"


def as_sequence(value) -> EvPerSeq:
    if isinstance(value, EvPerSeq):
        return value
    return EvPerSeq.parse(value)


def random_seq(rng: random.Random, max_preperiod: int = 6, max_period: int = 4) -> EvPerSeq:
    """A random sequence with preperiod and period lengths drawn uniformly."""
    pre = "".join(rng.choice("01") for _ in range(rng.randint(0, max_preperiod)))
    period = "".join(rng.choice("01") for _ in range(rng.randint(1, max_period)))
    return EvPerSeq(pre, period)


def lex_compare(a: EvPerSeq, b: EvPerSeq) -> int:
    """
    Lexicographic comparison with 0 < 1: -1, 0 or 1. Distinct sequences differ within
    the longer preperiod plus the lcm of the periods.
    """
    horizon = max(len(a.preperiod), len(b.preperiod)) + math.lcm(len(a.period), len(b.period))
    x, y = a.head(horizon), b.head(horizon)
    return (x > y) - (x < y)
