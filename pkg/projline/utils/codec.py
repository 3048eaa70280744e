"""
JSON codec for exact objects.

Encodings:
- rational: "p/q" (or "n" for integers).
- real algebraic: {"poly": [c0, c1, ...], "lo": "p/q", "hi": "p/q"}.
- number field element: {"coeffs": ["p/q", ...]}, read against a context.
- point: a scalar encoding, or "inf".
- matrix: [[a, b], [c, d]] of scalar encodings.
- piecewise map: {"pieces": [{"from": pt, "to": pt, "m": matrix}, ...]}.
- context: {"minpoly": [c0, ...], "lo": "p/q", "hi": "p/q"}.

Readers accept ints, "p/q" strings and already-built scalars wherever a scalar is expected.
"""
import enum
import json

from fractions import Fraction

from projline.exceptions.all import ScalarParseError
from projline.moebius import INF, MoebiusMap, as_point
from projline.numfield import FieldElement, NumberFieldContext, RealAlgebraic
from projline.numfield.scalar import as_scalar
from projline.pwhomeo import AffineGerm, Arc, LinkedConfig, PwProjMap


def encode_scalar(x):
    if isinstance(x, int) and not isinstance(x, bool):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (RealAlgebraic, FieldElement)):
        return x.to_json()
    raise ScalarParseError(f"Not a scalar: {x!r}.")


def decode_scalar(value, ctx: NumberFieldContext = None):
    """
    Raises:
        ScalarParseError: For a malformed value, or field coefficients without a context.
    """
    if isinstance(value, dict) and "coeffs" in value:
        if ctx is None:
            raise ScalarParseError("Field element coefficients need a number field context.")
        try:
            return ctx.element([Fraction(str(c)) for c in value["coeffs"]])
        except (ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"Bad coefficients in {value!r}.") from e
    return as_scalar(value)


def encode_point(p):
    return "inf" if p is INF else encode_scalar(p)


def decode_point(value, ctx: NumberFieldContext = None):
    if isinstance(value, dict) and "coeffs" in value:
        return decode_scalar(value, ctx)
    return as_point(value)


def encode_matrix(m: MoebiusMap) -> list:
    return [[encode_scalar(e) for e in row] for row in m.rows]


def decode_matrix(rows, ctx: NumberFieldContext = None) -> MoebiusMap:
    if isinstance(rows, MoebiusMap):
        return rows
    try:
        (a, b), (c, d) = rows
    except (TypeError, ValueError) as e:
        raise ScalarParseError(f"Expected a 2x2 matrix, got {rows!r}.") from e
    return MoebiusMap(*(decode_scalar(v, ctx) for v in (a, b, c, d)))


def encode_map(f: PwProjMap) -> dict:
    return {
        "pieces": [
            {"from": encode_point(p.arc.start), "to": encode_point(p.arc.end), "m": encode_matrix(p.map)}
            for p in f.pieces()
        ]
    }


def decode_map(data, ctx: NumberFieldContext = None) -> PwProjMap:
    """
    Reads and validates a piecewise map.

    A bare matrix is accepted as a single-piece map.
    """
    if isinstance(data, PwProjMap):
        return data
    if isinstance(data, list):
        return PwProjMap.from_moebius(decode_matrix(data, ctx))
    try:
        pieces = data["pieces"]
    except (TypeError, KeyError) as e:
        raise ScalarParseError(f"Expected {{'pieces': [...]}}, got {data!r}.") from e
    try:
        triples = [
            (decode_point(p["from"], ctx), decode_point(p["to"], ctx), decode_matrix(p["m"], ctx))
            for p in pieces
        ]
    except (TypeError, KeyError) as e:
        raise ScalarParseError(f"Malformed piece in {data!r}.") from e
    return PwProjMap.build(triples)


def encode_context(ctx: NumberFieldContext):
    return None if ctx is None else ctx.header()


def decode_context(header) -> NumberFieldContext:
    if header is None or isinstance(header, NumberFieldContext):
        return header
    try:
        return NumberFieldContext(header["minpoly"], Fraction(str(header["lo"])), Fraction(str(header["hi"])))
    except (TypeError, KeyError, ValueError, ZeroDivisionError) as e:
        raise ScalarParseError(f"Malformed context header {header!r}.") from e


def jsonable(obj):
    """
    Converts results of library calls into JSON-ready data, recursively.
    """
    if obj is None or isinstance(obj, (bool, int, str, float)):
        return obj
    if obj is INF:
        return "inf"
    if isinstance(obj, (Fraction, RealAlgebraic, FieldElement)):
        return encode_scalar(obj)
    if isinstance(obj, MoebiusMap):
        return encode_matrix(obj)
    if isinstance(obj, PwProjMap):
        return encode_map(obj)
    if isinstance(obj, NumberFieldContext):
        return encode_context(obj)
    if isinstance(obj, Arc):
        return {"from": jsonable(obj.start), "to": jsonable(obj.end), "closed": obj.closed}
    if isinstance(obj, AffineGerm):
        return {"slope": jsonable(obj.slope), "intercept": jsonable(obj.intercept)}
    if isinstance(obj, LinkedConfig):
        return {
            "f_pair": jsonable(obj.f_pair),
            "g_pair": jsonable(obj.g_pair),
            "f_in_g": jsonable(obj.f_in_g),
            "g_in_f": jsonable(obj.g_in_f),
            "doubly_linked": obj.doubly_linked,
        }
    if isinstance(obj, enum.Enum):
        return obj.value
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise ScalarParseError(f"Cannot encode {type(obj).__name__} as JSON.")


def dumps(obj, indent: int = 2) -> str:
    return json.dumps(jsonable(obj), indent=indent, ensure_ascii=False)


def load_file(path: str):
    """
    Raises:
        ScalarParseError: If the file is not valid JSON.
    """
    with open(path, "r", encoding="utf-8") as fd:
        try:
            return json.load(fd)
        except json.JSONDecodeError as e:
            raise ScalarParseError(f"{path} is not valid JSON: {e}.") from e
