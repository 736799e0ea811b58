"""Question-bank documents in the Moodle XML import/export dialect.

The writer produces a fully deterministic layout: serializing equal banks
always yields identical bytes, and any document this module emitted
parses back to a bank that serializes to the same bytes again. HTML-rich
text (stems, choice texts, matching prompts) is wrapped in CDATA so that
embedded markup and base64 data URIs stay readable; plain text nodes are
entity-escaped instead.

The parser also accepts documents from other tools as long as they are
well-formed and use the same dialect; question types outside the
supported set are skipped with a warning so that maintenance tooling can
operate on mixed banks.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .bank import QuestionBank
from .errors import BankParseError, QuizbankError
from .model import (
    Choice,
    ChoiceSet,
    MatchPairList,
    NumericalAnswerSet,
    Question,
    QuestionKind,
    ShortAnswerSet,
    canonical_number,
    parse_number,
)

XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'

# Category markers use the course-relative form understood by Moodle 3.x
# importers; the bank-level path "A/B" becomes "$course$/top/A/B".
CATEGORY_PREFIX = "$course$/top"

_SUPPORTED_TYPES = {kind.value for kind in QuestionKind}


def escape_for_cdata(text: str) -> str:
    """Make text safe inside a CDATA section.

    The only hazard is the terminator "]]>", which is split across two
    adjacent CDATA sections; everything else (including LaTeX delimiters
    and raw HTML) passes through byte-identical.
    """
    return text.replace("]]>", "]]]]><![CDATA[>")


def escape_xml_text(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def format_fraction(value) -> str:
    """Grade percentage as emitted in fraction attributes: 5-decimal grid."""
    rounded = round(float(value), 5)
    if rounded == 0:
        return "0"
    text = f"{rounded:.5f}".rstrip("0").rstrip(".")
    return text


def serialize_bank(bank) -> bytes:
    """Emit a bank as Moodle XML bytes (UTF-8, LF line endings)."""
    lines = [XML_DECLARATION, "<quiz>"]
    emitted_category = None
    for index, question in enumerate(bank.questions, start=1):
        category = question.category
        if (emitted_category is None and category) or (
            emitted_category is not None and category != emitted_category
        ):
            _emit_category(lines, category)
            emitted_category = category
        _emit_question(lines, question, index)
    lines.append("</quiz>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_bank(data) -> QuestionBank:
    """Parse Moodle XML bytes back into a QuestionBank.

    The returned bank has no output path (supply one before close()).
    Unsupported question types are skipped with a warning on the bank;
    malformed XML raises BankParseError with the reported line/column and
    leaves no partial bank behind.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line, column = exc.position
        raise BankParseError(
            f"malformed XML at line {line}, column {column}: {exc.msg}",
            line=line,
            column=column,
        ) from exc
    if root.tag != "quiz":
        raise BankParseError(f"expected <quiz> root element, found <{root.tag}>")

    bank = QuestionBank(output_path=None)
    current_category = ""
    for element in root:
        if element.tag != "question":
            bank.warn(f"ignoring unexpected element <{element.tag}>")
            continue
        qtype = element.get("type", "")
        if qtype == "category":
            current_category = _parse_category(element)
            continue
        if qtype not in _SUPPORTED_TYPES:
            bank.warn(f"skipping unsupported question type '{qtype}'")
            continue
        question = _parse_question(element, qtype, bank)
        if question is not None:
            question.category = current_category
            bank.questions.append(question)
    bank.category = current_category
    return bank


# -- writer ---------------------------------------------------------------


def _emit_category(lines, category_path) -> None:
    marker = CATEGORY_PREFIX if not category_path else f"{CATEGORY_PREFIX}/{category_path}"
    lines.append('  <question type="category">')
    lines.append("    <category>")
    lines.append(f"      <text>{escape_xml_text(marker)}</text>")
    lines.append("    </category>")
    lines.append("  </question>")


def _emit_question(lines, question, index) -> None:
    label = question.name or f"question #{index}"
    _check_encodable(question.name, label)
    _check_encodable(question.stem, label)
    lines.append(f'  <question type="{question.kind.value}">')
    lines.append("    <name>")
    lines.append(f"      <text>{escape_xml_text(question.name)}</text>")
    lines.append("    </name>")
    lines.append('    <questiontext format="html">')
    lines.append(f"      <text><![CDATA[{escape_for_cdata(question.stem)}]]></text>")
    lines.append("    </questiontext>")
    payload = question.payload
    if question.kind is QuestionKind.SHORT_ANSWER:
        lines.append("    <usecase>0</usecase>")
        for answer in payload.answers:
            _check_encodable(answer, label)
            lines.append('    <answer fraction="100">')
            lines.append(f"      <text>{escape_xml_text(answer)}</text>")
            lines.append("    </answer>")
    elif question.kind is QuestionKind.NUMERICAL:
        tolerance = canonical_number(payload.tolerance)
        for answer in payload.answers:
            lines.append('    <answer fraction="100">')
            lines.append(f"      <text>{canonical_number(answer)}</text>")
            lines.append(f"      <tolerance>{tolerance}</tolerance>")
            lines.append("    </answer>")
    elif question.kind is QuestionKind.MULTIPLE_CHOICE:
        lines.append("    <single>true</single>")
        lines.append("    <shuffleanswers>true</shuffleanswers>")
        lines.append("    <answernumbering>none</answernumbering>")
        for choice in payload.choices:
            _check_encodable(choice.text, label)
            fraction = format_fraction(choice.fraction)
            lines.append(f'    <answer fraction="{fraction}" format="html">')
            lines.append(
                f"      <text><![CDATA[{escape_for_cdata(choice.text)}]]></text>"
            )
            lines.append("    </answer>")
    elif question.kind is QuestionKind.MATCHING:
        lines.append("    <shuffleanswers>true</shuffleanswers>")
        for prompt, match in payload.pairs:
            _check_encodable(prompt, label)
            _check_encodable(match, label)
            lines.append('    <subquestion format="html">')
            lines.append(f"      <text><![CDATA[{escape_for_cdata(prompt)}]]></text>")
            lines.append("      <answer>")
            lines.append(f"        <text>{escape_xml_text(match)}</text>")
            lines.append("      </answer>")
            lines.append("    </subquestion>")
    lines.append("  </question>")


def _check_encodable(text, label) -> None:
    for ch in text:
        code = ord(ch)
        if code < 0x20 and ch not in "\t\n":
            raise QuizbankError(
                f"question {label!r} contains control character {ch!r}, "
                "which XML cannot encode"
            )


# -- parser ---------------------------------------------------------------


def _parse_category(element) -> str:
    raw = (element.findtext("category/text") or "").strip()
    if raw == CATEGORY_PREFIX or raw.startswith(CATEGORY_PREFIX + "/"):
        raw = raw[len(CATEGORY_PREFIX):]
    elif raw.startswith("$course$/"):
        raw = raw[len("$course$/"):]
    # Collapse accidental empty segments from foreign files.
    return "/".join(segment for segment in raw.split("/") if segment)


def _parse_question(element, qtype, bank):
    name = element.findtext("name/text") or ""
    stem = element.findtext("questiontext/text") or ""
    if qtype == QuestionKind.SHORT_ANSWER.value:
        answers = [ans.findtext("text") or "" for ans in element.findall("answer")]
        return Question(QuestionKind.SHORT_ANSWER, name, stem, ShortAnswerSet(answers))
    if qtype == QuestionKind.NUMERICAL.value:
        answers = []
        tolerance = 0.0
        for position, ans in enumerate(element.findall("answer")):
            answers.append(parse_number(ans.findtext("text") or "0"))
            tol_text = ans.findtext("tolerance")
            if tol_text is not None:
                parsed = parse_number(tol_text)
                if position == 0:
                    tolerance = parsed
                elif parsed != tolerance:
                    bank.warn(
                        f"question {name!r}: answers carry differing tolerances; "
                        f"keeping {tolerance}"
                    )
        return Question(
            QuestionKind.NUMERICAL, name, stem, NumericalAnswerSet(answers, tolerance)
        )
    if qtype == QuestionKind.MULTIPLE_CHOICE.value:
        single = (element.findtext("single") or "true").strip().lower()
        if single in ("false", "0"):
            bank.warn(
                f"skipping multi-select multiple-choice question {name!r} "
                "(only single-answer questions are supported)"
            )
            return None
        choices = [
            Choice(ans.findtext("text") or "", float(ans.get("fraction", "0")))
            for ans in element.findall("answer")
        ]
        return Question(QuestionKind.MULTIPLE_CHOICE, name, stem, ChoiceSet(choices))
    if qtype == QuestionKind.MATCHING.value:
        pairs = [
            (sub.findtext("text") or "", sub.findtext("answer/text") or "")
            for sub in element.findall("subquestion")
        ]
        return Question(QuestionKind.MATCHING, name, stem, MatchPairList(pairs))
    return None
