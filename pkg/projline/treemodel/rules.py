"""
The maps x, y and their inverses on binary sequences, localized to cones.

Each map is a table of head rewrites (prefix, replacement, next). x and x⁻¹ rewrite
the head once and keep the tail. y and y⁻¹ recurse into the tail, possibly switching
to the other map, so the image of an eventually periodic sequence is found by cycle
detection on the state (position in the input, current map).
"""
import enum
import re

from typing import NamedTuple

from projline.catalog.word import as_word
from projline.exceptions.all import TreeModelError
from projline.treemodel.sequence import EvPerSeq, as_sequence

GENERATOR = re.compile(r"^([xy])(?:_([01]+))?$")


class TreeKind(enum.Enum):
    X = "x"
    X_INV = "x_inv"
    Y = "y"
    Y_INV = "y_inv"

    def inverse(self) -> "TreeKind":
        return _INVERSE_KIND[self]


_INVERSE_KIND = {
    TreeKind.X: TreeKind.X_INV,
    TreeKind.X_INV: TreeKind.X,
    TreeKind.Y: TreeKind.Y_INV,
    TreeKind.Y_INV: TreeKind.Y,
}

# x(00ξ) = 0ξ, x(01ξ) = 10ξ, x(1ξ) = 11ξ; y(00ξ) = 0y(ξ), y(01ξ) = 10y⁻¹(ξ), y(1ξ) = 11y(ξ).
RULES = {
    TreeKind.X: (("00", "0", None), ("01", "10", None), ("1", "11", None)),
    TreeKind.X_INV: (("0", "00", None), ("10", "01", None), ("11", "1", None)),
    TreeKind.Y: (("00", "0", TreeKind.Y), ("01", "10", TreeKind.Y_INV), ("1", "11", TreeKind.Y)),
    TreeKind.Y_INV: (("0", "00", TreeKind.Y_INV), ("10", "01", TreeKind.Y), ("11", "1", TreeKind.Y_INV)),
}


def _match(seq: EvPerSeq, position: int, kind: TreeKind) -> tuple:
    for prefix, replacement, following in RULES[kind]:
        if all(seq.letter(position + i) == bit for i, bit in enumerate(prefix)):
            return prefix, replacement, following
    raise AssertionError("The rewrite tables cover every head.")


def _state_key(seq: EvPerSeq, position: int) -> int:
    pre = len(seq.preperiod)
    if position < pre:
        return position
    return pre + (position - pre) % len(seq.period)


def rewrite(kind: TreeKind, seq: EvPerSeq) -> EvPerSeq:
    """
    Applies one of the four maps.

    The number of visited states never exceeds twice the number of distinct suffix
    positions of `seq`.
    """
    seq = as_sequence(seq)
    output = []
    written = 0
    position = 0
    seen = {}

    while True:
        state = (_state_key(seq, position), kind)
        if state in seen:
            out = "".join(output)
            start = seen[state]
            return EvPerSeq(out[:start], out[start:])
        seen[state] = written

        prefix, replacement, following = _match(seq, position, kind)
        output.append(replacement)
        written += len(replacement)
        position += len(prefix)
        if following is None:
            return seq.drop(position).prepend("".join(output))
        kind = following


def apply_x(seq: EvPerSeq) -> EvPerSeq:
    return rewrite(TreeKind.X, seq)


def apply_x_inv(seq: EvPerSeq) -> EvPerSeq:
    return rewrite(TreeKind.X_INV, seq)


def apply_y(seq: EvPerSeq) -> EvPerSeq:
    return rewrite(TreeKind.Y, seq)


def apply_y_inv(seq: EvPerSeq) -> EvPerSeq:
    return rewrite(TreeKind.Y_INV, seq)


class TreeGen(NamedTuple):
    """
    One of x_s, x_s⁻¹, y_s, y_s⁻¹: the map applied to the tail of sequences starting
    with the address s, the identity elsewhere.
    """
    kind: TreeKind
    address: str = ""

    def inverse(self) -> "TreeGen":
        return TreeGen(self.kind.inverse(), self.address)

    def apply(self, seq) -> EvPerSeq:
        seq = as_sequence(seq)
        if not seq.startswith(self.address):
            return seq
        return rewrite(self.kind, seq.drop(len(self.address))).prepend(self.address)

    __call__ = apply

    def in_g0(self) -> bool:
        """y_s lies in the Lodha-Moore group only when s is neither empty nor constant."""
        if self.kind in (TreeKind.X, TreeKind.X_INV):
            return True
        return len(set(self.address)) == 2

    def format(self) -> str:
        letter = self.kind.value[0]
        name = f"{letter}_{self.address}" if self.address else letter
        if self.kind in (TreeKind.X_INV, TreeKind.Y_INV):
            return f"{name}^-1"
        return name

    def __str__(self):
        return self.format()


def apply_gen(gen: TreeGen, seq) -> EvPerSeq:
    return gen.apply(seq)


def parse_tree_word(word) -> list:
    """
    Reads a word such as "x_10.y_101^-1" into generators, leftmost first.

    Raises:
        TreeModelError: If a letter is not x or y with an optional binary address.
        WordSyntaxError: If the word itself is malformed.
    """
    gens = []
    for name, exponent in as_word(word).letters:
        match = GENERATOR.match(name)
        if not match:
            raise TreeModelError(f"Tree generators are x_s or y_s for a binary address s, got {name!r}.")
        kind = TreeKind.X if match.group(1) == "x" else TreeKind.Y
        gen = TreeGen(kind, match.group(2) or "")
        if exponent < 0:
            gen = gen.inverse()
        gens.extend([gen] * abs(exponent))
    return gens


def as_tree_word(word) -> list:
    if isinstance(word, TreeGen):
        return [word]
    if isinstance(word, (list, tuple)) and all(isinstance(g, TreeGen) for g in word):
        return list(word)
    return parse_tree_word(word)


def apply_word(word, seq) -> EvPerSeq:
    """Applies a tree word as a composition: the rightmost generator acts first."""
    seq = as_sequence(seq)
    for gen in reversed(as_tree_word(word)):
        seq = gen.apply(seq)
    return seq
