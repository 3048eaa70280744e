"""
Named generator sets and word evaluation.
"""
from projline.exceptions.all import CatalogError, UnknownGeneratorError
from projline.pwhomeo import PwProjMap, identity_map
from projline.catalog.word import NAME, Word, as_word
from projline.utils import codec


class GenSet:
    """
    An immutable table of named piecewise projective maps, optionally over a number field.

    Example:

    ```py
    G = preset_g_lambda(NumberFieldContext.rational(2))
    G.check_relation("a.b.a^-1.b^-2")  # True
    ```
    """

    def __init__(self, name: str, table: dict, context=None):
        """
        Raises:
            CatalogError: If a generator name is malformed or a value is not a `PwProjMap`.
        """
        for key, value in table.items():
            if not NAME.match(key):
                raise CatalogError(f"Bad generator name {key!r}.")
            if not isinstance(value, PwProjMap):
                raise CatalogError(f"Generator {key} is not a piecewise projective map.")
        self.name = name
        self.context = context
        self._table = dict(table)

    def __getitem__(self, name: str) -> PwProjMap:
        try:
            return self._table[name]
        except KeyError:
            raise UnknownGeneratorError(
                f"Generator {name!r} is not in {self.name} (have {', '.join(self._table)})."
            ) from None

    def __contains__(self, name):
        return name in self._table

    def __iter__(self):
        return iter(self._table)

    def __len__(self):
        return len(self._table)

    def names(self) -> list:
        return list(self._table)

    def items(self):
        return self._table.items()

    def extend(self, name: str, f: PwProjMap) -> "GenSet":
        """A copy with one more (or one replaced) generator."""
        table = dict(self._table)
        table[name] = f
        return GenSet(self.name, table, self.context)

    def define(self, name: str, word) -> "GenSet":
        """A copy with `name` bound to the value of `word`."""
        return self.extend(name, self.eval_word(word))

    def eval_word(self, word) -> PwProjMap:
        """
        Value of the word, composing left to right as functions (f.g is f ∘ g).

        Raises:
            UnknownGeneratorError: If a letter names no generator.
            WordSyntaxError: If `word` is an unparsable string.
        """
        word = as_word(word)
        for name in word.names():
            self[name]

        result = identity_map()
        for name, exponent in word.letters:
            result = result.compose(self[name].power(exponent))
        return result

    def check_relation(self, word) -> bool:
        return self.eval_word(word).is_identity()

    def commutator(self, u, v) -> PwProjMap:
        """[u, v] = u v u⁻¹ v⁻¹."""
        return self.eval_word(Word.commutator(as_word(u), as_word(v)))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "context": codec.encode_context(self.context),
            "generators": {name: codec.encode_map(f) for name, f in self._table.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "GenSet":
        """
        Reads the `--gens` file format.

        Raises:
            CatalogError: If the generators mapping is missing.
        """
        if not isinstance(data, dict) or not isinstance(data.get("generators"), dict):
            raise CatalogError("A generator set needs a 'generators' mapping.")
        ctx = codec.decode_context(data.get("context"))
        table = {name: codec.decode_map(value, ctx) for name, value in data["generators"].items()}
        return cls(data.get("name", "custom"), table, ctx)

    def __repr__(self):
        return f"<GenSet {self.name}: {', '.join(self._table)}>"


def eval_word(gens: GenSet, word) -> PwProjMap:
    return gens.eval_word(word)


def check_relation(gens: GenSet, word) -> bool:
    return gens.check_relation(word)


def commutator(gens: GenSet, u, v) -> PwProjMap:
    return gens.commutator(u, v)
