"""quizbank: script-based authoring of LMS-importable quiz question banks.

Build large, varied banks from short Python scripts: single-question
builders, pool-based random multiple-choice generators with provable
variant counts, Moodle XML output, a self-contained HTML preview, inline
media embedding, and bulk maintenance over existing banks.
"""

from .bank import QuestionBank, default_wrong_fraction
from .errors import (
    BankParseError,
    CapacityError,
    QuizbankError,
    SamplingError,
    ValidationError,
)
from .generators import (
    BLANK_MARKER,
    BLANK_MARKER_HTML,
    count_distinct,
    count_unique,
    sample_distractors,
)
from .maintenance import replace_text, replace_text_pattern, set_wrong_penalty
from .media import MediaAsset, embed_image, embed_raw_html, embed_video
from .model import (
    Choice,
    ChoiceSet,
    MatchPairList,
    NumericalAnswerSet,
    Question,
    QuestionKind,
    ShortAnswerSet,
)
from .moodle_xml import escape_for_cdata, parse_bank, serialize_bank
from .preview import render_preview

__version__ = "0.1.0"

__all__ = [
    "QuestionBank",
    "default_wrong_fraction",
    "QuestionKind",
    "Question",
    "Choice",
    "ChoiceSet",
    "ShortAnswerSet",
    "NumericalAnswerSet",
    "MatchPairList",
    "count_unique",
    "count_distinct",
    "sample_distractors",
    "BLANK_MARKER",
    "BLANK_MARKER_HTML",
    "serialize_bank",
    "parse_bank",
    "escape_for_cdata",
    "render_preview",
    "MediaAsset",
    "embed_image",
    "embed_video",
    "embed_raw_html",
    "replace_text",
    "replace_text_pattern",
    "set_wrong_penalty",
    "QuizbankError",
    "ValidationError",
    "CapacityError",
    "SamplingError",
    "BankParseError",
]
