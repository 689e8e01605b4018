import json
import random
from fractions import Fraction

import pytest

from cantorshift import DocumentError
from cantorshift.documents import (
    doc_to_number,
    doc_to_system,
    emit_tsv,
    number_to_doc,
    parse_number,
    parse_system,
    system_to_doc,
)
from cantorshift.rationals import decimal_str, parse_rational, rational_str
from cantorshift.sampling import rand_cantor_system, rand_number, rand_qtilde_system
from helpers import DEC, NEG, QT, mk


class TestParseSystem:
    def test_decimal(self):
        doc = {"kind": "cantor", "base": {"prefix": [], "cycle": [10]}, "signs": "none"}
        assert doc_to_system(doc) == DEC

    def test_column_system(self):
        doc = {"kind": "qtilde",
               "columns": {"prefix": [], "cycle": [["1/4", "3/4"]]},
               "signs": "none"}
        assert doc_to_system(doc) == QT

    def test_column_sum_diagnostic_names_path(self):
        doc = {"kind": "qtilde",
               "columns": {"prefix": [], "cycle": [["1/2", "1/3"]]},
               "signs": "none"}
        with pytest.raises(DocumentError, match=r"column sum != 1 at \$\.columns\.cycle\[0\]"):
            doc_to_system(doc)

    def test_base_diagnostic_names_path(self):
        doc = {"kind": "cantor", "base": {"prefix": [10, 1], "cycle": [10]}, "signs": "none"}
        with pytest.raises(DocumentError, match=r"\$\.base\.prefix\[1\]"):
            doc_to_system(doc)

    def test_bad_rational_literal(self):
        for bad in ("1/0", "1/-4", "x/3"):
            doc = {"kind": "qtilde",
                   "columns": {"prefix": [], "cycle": [[bad, "3/4"]]},
                   "signs": "none"}
            with pytest.raises(DocumentError):
                doc_to_system(doc)

    def test_malformed_json(self):
        with pytest.raises(DocumentError, match="malformed JSON"):
            parse_system("{not json")

    def test_explicit_signs(self):
        doc = {"kind": "cantor", "base": {"prefix": [], "cycle": [10]},
               "signs": {"prefix": [True], "cycle": [False, True]}}
        system = doc_to_system(doc)
        assert system.signs.member(1) and not system.signs.member(2)


class TestParseNumber:
    def test_inline_system(self):
        doc = {"system": system_to_doc(DEC),
               "digits": {"prefix": [1, 2, 3], "tail": {"type": "zeros"}}}
        assert doc_to_number(doc) == mk(DEC, (1, 2, 3))

    def test_digit_out_of_range_path(self):
        doc = {"system": system_to_doc(DEC),
               "digits": {"prefix": [12], "tail": {"type": "zeros"}}}
        with pytest.raises(DocumentError, match=r"\$\.digits"):
            doc_to_number(doc)

    def test_misaligned_cycle(self):
        doc = {"system": system_to_doc(NEG),
               "digits": {"prefix": [], "tail": {"type": "cycle", "cycle": [9]}}}
        with pytest.raises(DocumentError):
            doc_to_number(doc)

    def test_roundtrip_random(self):
        rng = random.Random(41)
        for _ in range(30):
            system = rand_cantor_system(rng) if rng.random() < 0.5 else rand_qtilde_system(rng)
            num = rand_number(rng, system, max_prefix=6)
            assert doc_to_number(number_to_doc(num)) == num
            assert doc_to_system(system_to_doc(system)) == system
            # documents survive JSON text serialization byte-exactly
            assert parse_number(json.dumps(number_to_doc(num))) == num


class TestRationalStrings:
    def test_parse_forms(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-7/2") == Fraction(-7, 2)
        assert parse_rational("5") == 5

    def test_rational_str_keeps_denominator(self):
        assert rational_str(Fraction(123, 1000)) == "123/1000"
        assert rational_str(Fraction(1)) == "1/1"

    def test_decimal_str(self):
        assert decimal_str(Fraction(123, 1000), 12) == "0.123"
        assert decimal_str(Fraction(1, 3), 6) == "0.333333"
        assert decimal_str(Fraction(-1, 8), 3) == "-0.125"
        assert decimal_str(Fraction(2, 3), 3) == "0.667"
        assert decimal_str(Fraction(1, 4), 6, fixed=True) == "0.250000"
        assert decimal_str(Fraction(0), 4) == "0"


class TestEmitTsv:
    def test_header_and_dual_columns(self):
        text = emit_tsv(("lo", "hi"), [(Fraction(1, 4), Fraction(1, 2))], precision=3)
        lines = text.splitlines()
        assert lines[0].split("\t") == ["lo", "hi", "lo_dec", "hi_dec"]
        assert lines[1].split("\t") == ["1/4", "1/2", "0.250", "0.500"]

    def test_empty_rows_keep_header(self):
        text = emit_tsv(("x", "y"), [])
        assert text == "x\ty\tx_dec\ty_dec\n"
