"""
Words in named generators.

Syntax: dot-separated generator names with optional integer exponents, for example
"b.a_plus^-1.b^2". The empty string (or "id") is the empty word.

A word f.g evaluates to f ∘ g: the rightmost letter acts first.
"""
import re

from projline.exceptions.all import WordSyntaxError

NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

LETTER = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([+-]?\d+))?\s*$")

EMPTY_WORDS = {"", "id", "1"}


class Word:
    """
    Immutable sequence of (generator name, nonzero exponent) letters.

    Example:

    ```py
    w = Word.parse("b.a_plus^-1.b^2")
    w.letters      # (("b", 1), ("a_plus", -1), ("b", 2))
    str(w.inverse())  # "b^-2.a_plus.b^-1"
    ```
    """
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        """
        Raises:
            WordSyntaxError: If a letter has exponent zero or a malformed name.
        """
        checked = []
        for name, exponent in letters:
            if not isinstance(name, str) or not NAME.match(name):
                raise WordSyntaxError(f"Bad generator name {name!r}.")
            if not isinstance(exponent, int) or exponent == 0:
                raise WordSyntaxError(f"Exponent of {name} must be a nonzero integer, got {exponent!r}.")
            checked.append((name, exponent))
        self.letters = tuple(checked)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Raises:
            WordSyntaxError: On malformed input.
        """
        if not isinstance(text, str):
            raise WordSyntaxError(f"Expected a word string, got {text!r}.")
        if text.strip() in EMPTY_WORDS:
            return cls()

        letters = []
        for token in text.split("."):
            match = LETTER.match(token)
            if not match:
                raise WordSyntaxError(f"Cannot parse letter {token!r} in {text!r}.")
            name, exponent = match.group(1), int(match.group(2) or 1)
            if exponent == 0:
                raise WordSyntaxError(f"Zero exponent on {name} in {text!r}.")
            letters.append((name, exponent))
        return cls(letters)

    @classmethod
    def generator(cls, name: str, exponent: int = 1) -> "Word":
        return cls([(name, exponent)])

    @classmethod
    def commutator(cls, u: "Word", v: "Word") -> "Word":
        """[u, v] = u v u⁻¹ v⁻¹."""
        return u + v + u.inverse() + v.inverse()

    def format(self) -> str:
        if not self.letters:
            return "id"
        return ".".join(name if e == 1 else f"{name}^{e}" for name, e in self.letters)

    def inverse(self) -> "Word":
        return Word((name, -e) for name, e in reversed(self.letters))

    def power(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def concatenate(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    __add__ = concatenate

    def reversed(self) -> "Word":
        """The letters in opposite order, exponents kept: reads a right-action word."""
        return Word(reversed(self.letters))

    def reduced(self) -> "Word":
        """Merges adjacent powers of the same generator and drops cancelled letters."""
        stack = []
        for name, e in self.letters:
            if stack and stack[-1][0] == name:
                total = stack.pop()[1] + e
                if total:
                    stack.append((name, total))
            else:
                stack.append((name, e))
        return Word(stack)

    def names(self) -> set:
        return {name for name, _ in self.letters}

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({self.format()!r})"

    __str__ = format


def as_word(value) -> Word:
    return value if isinstance(value, Word) else Word.parse(value)
