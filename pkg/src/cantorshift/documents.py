"""JSON documents for systems and numbers, and TSV emission.

Rationals cross this boundary as "p/q" strings with positive
denominators.  Parse errors and validation failures name the first
violated invariant together with its JSON path.
"""

import json
from fractions import Fraction

from .errors import DocumentError
from .numbers import (
    RepresentedNumber,
    TAIL_MAX,
    TAIL_ZEROS,
    DigitStream,
    cycle_tail,
    validate_number,
)
from .rationals import decimal_str, parse_rational, rational_str
from .series import EventuallyPeriodicSeq
from .systems import (
    CantorSystem,
    QTildeColumn,
    QTildeSystem,
    SignPattern,
    validate,
)

__all__ = [
    "system_to_doc",
    "doc_to_system",
    "number_to_doc",
    "doc_to_number",
    "parse_system",
    "parse_number",
    "emit_tsv",
]

_NAMED_SIGNS = {
    "none": SignPattern.none,
    "odd": SignPattern.odd,
    "even": SignPattern.even,
}


def _signs_to_doc(signs):
    for name, ctor in _NAMED_SIGNS.items():
        if signs == ctor():
            return name
    return {
        "prefix": [bool(b) for b in signs.membership.prefix],
        "cycle": [bool(b) for b in signs.membership.cycle],
    }


def system_to_doc(system):
    if isinstance(system, CantorSystem):
        return {
            "kind": "cantor",
            "base": {"prefix": list(system.base.prefix), "cycle": list(system.base.cycle)},
            "signs": _signs_to_doc(system.signs),
        }
    return {
        "kind": "qtilde",
        "columns": {
            "prefix": [[rational_str(e) for e in col.entries] for col in system.columns.prefix],
            "cycle": [[rational_str(e) for e in col.entries] for col in system.columns.cycle],
        },
        "signs": _signs_to_doc(system.signs),
    }


def _expect_dict(obj, path):
    if not isinstance(obj, dict):
        raise DocumentError(f"expected an object at {path}")
    return obj


def _expect_list(obj, path):
    if not isinstance(obj, list):
        raise DocumentError(f"expected an array at {path}")
    return obj


def _get(obj, key, path):
    _expect_dict(obj, path)
    if key not in obj:
        raise DocumentError(f"missing key {key!r} at {path}")
    return obj[key]


def _int_list(obj, path):
    items = _expect_list(obj, path)
    for i, v in enumerate(items):
        if not isinstance(v, int) or isinstance(v, bool):
            raise DocumentError(f"expected an integer at {path}[{i}]")
    return items


def _parse_signs(obj, path):
    if isinstance(obj, str):
        if obj in _NAMED_SIGNS:
            return _NAMED_SIGNS[obj]()
        raise DocumentError(f"unknown sign pattern {obj!r} at {path}")
    _expect_dict(obj, path)
    prefix = _expect_list(_get(obj, "prefix", path), f"{path}.prefix")
    cycle = _expect_list(_get(obj, "cycle", path), f"{path}.cycle")
    for where, items in ((f"{path}.prefix", prefix), (f"{path}.cycle", cycle)):
        for i, v in enumerate(items):
            if not isinstance(v, bool):
                raise DocumentError(f"expected a boolean at {where}[{i}]")
    if not cycle:
        raise DocumentError(f"sign cycle must be nonempty at {path}.cycle")
    return SignPattern.explicit(prefix, cycle)


def _parse_column(obj, path):
    items = _expect_list(obj, path)
    if not items:
        raise DocumentError(f"column must be nonempty at {path}")
    return QTildeColumn(tuple(parse_rational(v, f"{path}[{i}]") for i, v in enumerate(items)))


def doc_to_system(obj, path="$"):
    kind = _get(obj, "kind", path)
    signs = _parse_signs(_get(obj, "signs", path), f"{path}.signs")
    if kind == "cantor":
        base = _get(obj, "base", path)
        prefix = _int_list(_get(base, "prefix", f"{path}.base"), f"{path}.base.prefix")
        cycle = _int_list(_get(base, "cycle", f"{path}.base"), f"{path}.base.cycle")
        if not cycle:
            raise DocumentError(f"base cycle must be nonempty at {path}.base.cycle")
        system = CantorSystem(EventuallyPeriodicSeq(tuple(prefix), tuple(cycle)), signs)
    elif kind == "qtilde":
        cols = _get(obj, "columns", path)
        prefix = _expect_list(_get(cols, "prefix", f"{path}.columns"), f"{path}.columns.prefix")
        cycle = _expect_list(_get(cols, "cycle", f"{path}.columns"), f"{path}.columns.cycle")
        if not cycle:
            raise DocumentError(f"columns cycle must be nonempty at {path}.columns.cycle")
        system = QTildeSystem(
            EventuallyPeriodicSeq(
                tuple(_parse_column(c, f"{path}.columns.prefix[{i}]") for i, c in enumerate(prefix)),
                tuple(_parse_column(c, f"{path}.columns.cycle[{i}]") for i, c in enumerate(cycle)),
            ),
            signs,
        )
    else:
        raise DocumentError(f"unknown system kind {kind!r} at {path}.kind")
    report = validate(system)
    if not report.ok:
        first = report.problems[0]
        raise DocumentError(f"{first.message} at {path}.{first.path}" if first.path
                            else f"{first.message} at {path}")
    return system


def number_to_doc(num):
    tail = num.digits.tail
    if tail.kind == "cycle":
        tail_doc = {"type": "cycle", "cycle": list(tail.cycle)}
    else:
        tail_doc = {"type": tail.kind}
    return {
        "system": system_to_doc(num.system),
        "digits": {"prefix": list(num.digits.prefix), "tail": tail_doc},
    }


def doc_to_number(obj, path="$", load_file=None):
    system_obj = _get(obj, "system", path)
    if isinstance(system_obj, str):
        if load_file is None:
            raise DocumentError(f"system file references are not allowed at {path}.system")
        system = load_file(system_obj)
    else:
        system = doc_to_system(system_obj, f"{path}.system")
    digits = _get(obj, "digits", path)
    prefix = _int_list(_get(digits, "prefix", f"{path}.digits"), f"{path}.digits.prefix")
    tail_obj = _get(digits, "tail", f"{path}.digits")
    tail_type = _get(tail_obj, "type", f"{path}.digits.tail")
    if tail_type == "zeros":
        tail = TAIL_ZEROS
    elif tail_type == "max":
        tail = TAIL_MAX
    elif tail_type == "cycle":
        cyc = _int_list(_get(tail_obj, "cycle", f"{path}.digits.tail"),
                        f"{path}.digits.tail.cycle")
        if not cyc:
            raise DocumentError(f"cycle must be nonempty at {path}.digits.tail.cycle")
        tail = cycle_tail(cyc)
    else:
        raise DocumentError(f"unknown tail type {tail_type!r} at {path}.digits.tail.type")
    num = RepresentedNumber(system, DigitStream(tuple(prefix), tail))
    try:
        validate_number(num)
    except Exception as exc:
        raise DocumentError(f"{exc} at {path}.digits") from exc
    return num


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from exc


def parse_system(text):
    """Parse and validate a system document from JSON text."""
    return doc_to_system(_loads(text))


def parse_number(text, load_file=None):
    """Parse and validate a number document from JSON text."""
    return doc_to_number(_loads(text), load_file=load_file)


def emit_tsv(header, rows, precision=12):
    """Tab-separated text: every rational column appears twice, once as
    "p/q" and once as a fixed-precision decimal approximation."""
    names = list(header) + [f"{h}_dec" for h in header]
    lines = ["\t".join(names)]
    for row in rows:
        exact = [rational_str(Fraction(v)) for v in row]
        approx = [decimal_str(Fraction(v), precision, fixed=True) for v in row]
        lines.append("\t".join(exact + approx))
    return "\n".join(lines) + "\n"
