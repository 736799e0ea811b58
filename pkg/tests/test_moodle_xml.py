"""Serialization dialect, CDATA handling, and round-trip guarantees."""

import re

import pytest

from quizbank import (
    BankParseError,
    QuestionKind,
    escape_for_cdata,
    parse_bank,
    serialize_bank,
)
from quizbank.moodle_xml import format_fraction

from conftest import build_rich_bank


def questions_as_tuples(bank):
    """Structural fingerprint of a bank for identity comparisons."""
    result = []
    for q in bank.questions:
        payload = q.payload
        if q.kind is QuestionKind.MULTIPLE_CHOICE:
            body = tuple((c.text, round(c.fraction, 5)) for c in payload.choices)
        elif q.kind is QuestionKind.SHORT_ANSWER:
            body = tuple(payload.answers)
        elif q.kind is QuestionKind.NUMERICAL:
            body = (tuple(payload.answers), payload.tolerance)
        else:
            body = tuple(payload.pairs)
        result.append((q.kind, q.name, q.stem, q.category, body))
    return result


class TestEscapeForCdata:
    def test_markup_passes_through(self):
        assert escape_for_cdata("a<b") == "a<b"
        assert escape_for_cdata("x & <i>y</i>") == "x & <i>y</i>"

    def test_terminator_is_split(self):
        assert escape_for_cdata("x]]>y") == "x]]]]><![CDATA[>y"

    def test_latex_is_byte_identical(self):
        assert escape_for_cdata("\\(x^2\\)") == "\\(x^2\\)"
        assert escape_for_cdata("$$\\int_0^1 x\\,dx$$") == "$$\\int_0^1 x\\,dx$$"

    def test_terminator_survives_round_trip(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("", "Does <b>x]]>y</b> parse?", ["yes"])
        recovered = parse_bank(serialize_bank(bank))
        assert recovered.questions[0].stem == "Does <b>x]]>y</b> parse?"


class TestFormatFraction:
    @pytest.mark.parametrize(
        "value,text",
        [
            (100.0, "100"),
            (-100.0, "-100"),
            (-100.0 / 3, "-33.33333"),
            (-50.0, "-50"),
            (-12.5, "-12.5"),
            (0.0, "0"),
            (-0.0, "0"),
        ],
    )
    def test_grid_rendering(self, value, text):
        assert format_fraction(value) == text


class TestSerialize:
    def test_multichoice_element_shape(self, make_bank):
        bank = make_bank()
        bank.addMultipleChoice("", "Q?", ["right", "w1", "w2", "w3"])
        text = serialize_bank(bank).decode()
        assert '<question type="multichoice">' in text
        assert "<single>true</single>" in text
        assert text.count('fraction="100"') == 1
        assert text.count('fraction="-33.33333"') == 3

    def test_numerical_answers_carry_tolerance(self, make_bank):
        bank = make_bank()
        bank.addNumerical("", "Solve \\(2x^2+4x-30=0\\)", [3, -5], 0.01)
        text = serialize_bank(bank).decode()
        assert text.count("<tolerance>0.01</tolerance>") == 2
        assert "<text>3</text>" in text
        assert "<text>-5</text>" in text

    def test_empty_bank_is_valid_document(self, make_bank):
        data = serialize_bank(make_bank())
        assert parse_bank(data).questions == []

    def test_category_reset_to_default_emits_marker(self, make_bank):
        bank = make_bank()
        bank.setCategory("Topic")
        bank.addShortAnswer("", "One?", ["a"])
        bank.setCategory("")
        bank.addShortAnswer("", "Two?", ["b"])
        text = serialize_bank(bank).decode()
        assert "<text>$course$/top/Topic</text>" in text
        assert "<text>$course$/top</text>" in text

    def test_no_marker_before_default_prefix(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("", "Q?", ["a"])
        assert b'type="category"' not in serialize_bank(bank)

    def test_no_raw_markup_outside_cdata(self, rich_bank):
        text = serialize_bank(rich_bank).decode()
        stripped = re.sub(r"<!\[CDATA\[.*?\]\]>", "", text, flags=re.S)
        for line in stripped.splitlines():
            content = re.sub(r"<[^<>]+>", "", line)
            assert "<" not in content, line
            assert re.search(r"&(?!amp;|lt;|gt;)", content) is None, line

    def test_plain_text_fields_are_entity_escaped(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("a<b & c", "Is a&lt;b?", ["a<b"])
        text = serialize_bank(bank).decode()
        assert "<text>a&lt;b &amp; c</text>" in text
        recovered = parse_bank(serialize_bank(bank))
        assert recovered.questions[0].name == "a<b & c"
        assert recovered.questions[0].payload.answers == ["a<b"]

    def test_control_characters_rejected_with_question_name(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("bell", "Q\x07?", ["a"])
        with pytest.raises(Exception) as err:
            serialize_bank(bank)
        assert "bell" in str(err.value)


class TestRoundTrip:
    def test_parse_serialize_is_byte_identity(self, rich_bank):
        first = serialize_bank(rich_bank)
        second = serialize_bank(parse_bank(first))
        assert first == second

    def test_serialize_parse_preserves_structure(self, rich_bank):
        recovered = parse_bank(serialize_bank(rich_bank))
        assert questions_as_tuples(recovered) == questions_as_tuples(rich_bank)

    def test_round_trip_of_generated_bank(self, make_bank):
        bank = make_bank(seed=13)
        bank.setCategory("Generated")
        bank.addMultipleChoiceFromLists(
            "g", "Pick one:", ["a", "b", "c"], ["d", "e", "f", "g"], 7
        )
        first = serialize_bank(bank)
        assert serialize_bank(parse_bank(first)) == first

    def test_round_trip_keeps_fraction_grid(self, make_bank):
        bank = make_bank()
        bank.addMultipleChoice("", "Q?", ["x", "y", "z"])  # k=3 -> -50
        recovered = parse_bank(serialize_bank(bank))
        assert [c.fraction for c in recovered.questions[0].payload.choices] == [
            100.0,
            -50.0,
            -50.0,
        ]


class TestParse:
    def test_unsupported_type_skipped_with_warning(self):
        document = (
            '<?xml version="1.0" encoding="UTF-8"?>\n<quiz>\n'
            '  <question type="essay">\n'
            "    <name><text>write</text></name>\n"
            '    <questiontext format="html"><text>Discuss.</text></questiontext>\n'
            "  </question>\n"
            '  <question type="shortanswer">\n'
            "    <name><text>keep</text></name>\n"
            '    <questiontext format="html"><text>Q?</text></questiontext>\n'
            '    <answer fraction="100"><text>a</text></answer>\n'
            "  </question>\n"
            "</quiz>\n"
        )
        bank = parse_bank(document)
        assert [q.name for q in bank.questions] == ["keep"]
        assert any("essay" in w for w in bank.warnings)

    def test_multiselect_multichoice_skipped(self):
        document = (
            "<quiz>"
            '<question type="multichoice">'
            "<name><text>multi</text></name>"
            "<questiontext><text>Q?</text></questiontext>"
            "<single>false</single>"
            '<answer fraction="50"><text>a</text></answer>'
            '<answer fraction="50"><text>b</text></answer>'
            "</question></quiz>"
        )
        bank = parse_bank(document)
        assert bank.questions == []
        assert any("multi" in w for w in bank.warnings)

    def test_truncated_document_reports_position(self, rich_bank):
        data = serialize_bank(rich_bank)[:-40]
        with pytest.raises(BankParseError) as err:
            parse_bank(data)
        assert err.value.line is not None
        assert re.search(r"line \d+, column \d+", str(err.value))

    def test_wrong_root_rejected(self):
        with pytest.raises(BankParseError):
            parse_bank("<quizzes></quizzes>")

    def test_category_markers_recovered(self, make_bank):
        bank = make_bank()
        bank.setCategory("A/B")
        bank.addShortAnswer("", "Q?", ["x"])
        recovered = parse_bank(serialize_bank(bank))
        assert recovered.questions[0].category == "A/B"

    def test_latex_stems_survive(self, make_bank):
        bank = make_bank()
        stem = "Solve \\( 3x^2+5x-2=0 \\) and $$\\sum_i x_i$$"
        bank.addNumerical("", stem, [1 / 3, -2.0], 0.01)
        recovered = parse_bank(serialize_bank(bank))
        assert recovered.questions[0].stem == stem
        assert recovered.questions[0].payload.answers == [1 / 3, -2.0]


class TestRepeatedRoundTrips:
    def test_three_cycles_are_stable(self, make_bank):
        bank = build_rich_bank(make_bank(seed=3))
        data = serialize_bank(bank)
        for _ in range(3):
            bank = parse_bank(data)
            next_data = serialize_bank(bank)
            assert next_data == data
            data = next_data
