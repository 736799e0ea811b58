"""Static, shareable HTML preview of a question bank.

The page approximates an LMS quiz page but deliberately leaks answers to
the instructor: the first multiple-choice alternative is always the
correct one, accepted numerical/short answers sit next to the (disabled)
input field, and matching drop-downs come pre-aligned with their prompts.
Question names are shown too (auto-numbered "Q1", "Q2", ... when empty),
so large banks can be searched in the browser.

Everything is inlined except the optional math renderer, which defaults
to a CDN script tag; pass a local file path to inline it for fully
offline previews, or None to drop math rendering.
"""

from __future__ import annotations

import html
import os
import tempfile
import webbrowser
from pathlib import Path

from .model import QuestionKind, canonical_number

_STYLE = """
body { font-family: sans-serif; background: #f4f4f4; margin: 0; padding: 1em; }
main { max-width: 860px; margin: 0 auto; }
h1 { font-size: 1.3em; }
h2.category { font-size: 1.05em; color: #334; border-bottom: 2px solid #889;
  padding-bottom: 0.2em; margin-top: 1.4em; }
article.question { background: #fff; border: 1px solid #ccc; border-radius: 6px;
  padding: 0.8em 1em; margin: 0.9em 0; }
article.question > header { display: flex; justify-content: space-between;
  color: #246; font-weight: bold; margin-bottom: 0.5em; }
span.question-kind { color: #789; font-weight: normal; font-size: 0.85em; }
div.stem { margin-bottom: 0.6em; }
ol.choices { list-style: none; padding-left: 0.4em; margin: 0; }
ol.choices li { margin: 0.25em 0; }
li.choice.correct { background: #e7f6e7; border-radius: 4px; }
div.response input[type=text] { border: 1px solid #aaa; border-radius: 3px;
  padding: 0.15em 0.4em; }
span.accepted { color: #164; margin-left: 0.6em; font-weight: bold; }
span.tolerance { color: #666; margin-left: 0.4em; }
table.match-pairs td { padding: 0.25em 0.7em 0.25em 0; vertical-align: top; }
p.empty-notice { background: #fff3d4; border: 1px solid #dbc37a; padding: 0.8em;
  border-radius: 6px; }
pre { background: #f7f7f7; border: 1px solid #ddd; padding: 0.5em; overflow-x: auto; }
""".strip()

MATHJAX_CDN_URL = "https://cdn.jsdelivr.net/npm/mathjax@3/es5/tex-chtml.js"

_MATH_CONFIG = (
    "window.MathJax = {tex: {inlineMath: [['\\\\(', '\\\\)']], "
    "displayMath: [['$$', '$$']]}};"
)


def render_preview(bank, output_path, math="cdn"):
    """Write the preview page for ``bank`` to ``output_path``.

    ``math`` selects the LaTeX renderer: "cdn" references it from a CDN,
    a file path inlines that script for offline use, None omits it.
    Returns the output path.
    """
    output_path = Path(output_path)
    document = build_preview_html(bank, math=math)
    try:
        output_path.write_bytes(document.encode("utf-8"))
    except OSError as exc:
        raise OSError(f"cannot write preview to {output_path}: {exc}") from exc
    return output_path


def open_preview(bank):
    """Render to a fresh temporary file and ask the system browser to open it.

    Every call uses a new file, so repeated previews never clobber each
    other. When no browser can be launched, the path is printed instead.
    Returns the path.
    """
    fd, name = tempfile.mkstemp(prefix="quizbank-preview-", suffix=".html")
    os.close(fd)
    path = render_preview(bank, name)
    try:
        opened = webbrowser.open(path.as_uri())
    except Exception:
        opened = False
    if not opened:
        print(f"Preview written to {path}")
    return path


def build_preview_html(bank, math="cdn") -> str:
    parts = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        "<title>Question bank preview</title>",
        f"<style>{_STYLE}</style>",
    ]
    parts.extend(_math_script(math))
    parts.append("</head>")
    parts.append("<body>")
    parts.append("<main>")
    source = html.escape(str(bank.output_path)) if bank.output_path else "unsaved bank"
    parts.append(f"<h1>Question bank preview &mdash; {source}</h1>")
    if not bank.questions:
        parts.append('<p class="empty-notice">This bank contains no questions.</p>')
    shown_category = None
    for index, question in enumerate(bank.questions, start=1):
        category = question.category
        if (shown_category is None and category) or (
            shown_category is not None and category != shown_category
        ):
            heading = category.replace("/", " / ") if category else "Default category"
            parts.append(f'<h2 class="category">{html.escape(heading)}</h2>')
            shown_category = category
        parts.append(_question_block(question, index))
    parts.append("</main>")
    parts.append("</body>")
    parts.append("</html>")
    return "\n".join(parts) + "\n"


def _math_script(math):
    if math is None:
        return []
    if math == "cdn":
        return [
            f"<script>{_MATH_CONFIG}</script>",
            f'<script async src="{MATHJAX_CDN_URL}"></script>',
        ]
    source = Path(math).read_text(encoding="utf-8")
    return [f"<script>{_MATH_CONFIG}</script>", f"<script>{source}</script>"]


def _question_block(question, index) -> str:
    shown_name = question.name if question.name else f"Q{index}"
    rows = [
        f'<article class="question" data-kind="{question.kind.value}">',
        "<header>"
        f'<span class="question-name">{html.escape(shown_name)}</span>'
        f'<span class="question-kind">{question.kind.value}</span>'
        "</header>",
        f'<div class="stem">{question.stem}</div>',
    ]
    kind = question.kind
    if kind is QuestionKind.MULTIPLE_CHOICE:
        rows.append(_choices_body(question.payload))
    elif kind is QuestionKind.NUMERICAL:
        accepted = " | ".join(canonical_number(a) for a in question.payload.answers)
        tolerance = canonical_number(question.payload.tolerance)
        rows.append(
            '<div class="response"><input type="text" disabled>'
            f'<span class="accepted">{html.escape(accepted)}</span>'
            f'<span class="tolerance">&plusmn; {html.escape(tolerance)}</span></div>'
        )
    elif kind is QuestionKind.SHORT_ANSWER:
        accepted = " | ".join(question.payload.answers)
        rows.append(
            '<div class="response"><input type="text" disabled>'
            f'<span class="accepted">{html.escape(accepted)}</span></div>'
        )
    elif kind is QuestionKind.MATCHING:
        rows.append(_matching_body(question.payload))
    rows.append("</article>")
    return "\n".join(rows)


def _choices_body(payload) -> str:
    # Correct alternative(s) first; everything else keeps its stored order.
    ordered = [c for c in payload.choices if c.fraction == 100]
    ordered += [c for c in payload.choices if c.fraction != 100]
    items = []
    for choice in ordered:
        correct = choice.fraction == 100
        css = "choice correct" if correct else "choice"
        checked = " checked" if correct else ""
        items.append(
            f'<li class="{css}"><label><input type="radio" disabled{checked}> '
            f"{choice.text}</label></li>"
        )
    return '<ol class="choices">\n' + "\n".join(items) + "\n</ol>"


def _matching_body(payload) -> str:
    # One drop-down per prompt, options in pair order, own match selected.
    options_in_order = [match for _, match in payload.pairs]
    rows = ['<table class="match-pairs">']
    for prompt, match in payload.pairs:
        options = []
        selected_done = False
        for option in options_in_order:
            selected = ""
            if option == match and not selected_done:
                selected = " selected"
                selected_done = True
            options.append(f"<option{selected}>{html.escape(option)}</option>")
        rows.append(
            f'<tr><td class="match-prompt">{prompt}</td>'
            f"<td><select disabled>{''.join(options)}</select></td></tr>"
        )
    rows.append("</table>")
    return "\n".join(rows)
