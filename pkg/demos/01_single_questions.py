"""Build a small bank with one question of each kind, then preview it.

Run:  python demos/01_single_questions.py
Then: quizbank stats demos/output/single_questions.xml
"""

from pathlib import Path

from quizbank import QuestionBank, render_preview

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)

Q = QuestionBank(OUTPUT / "single_questions.xml", seed=42)

# Questions land in the category that is current when they are added.
Q.setCategory("Databases/SQL basics")

Q.addShortAnswer(
    "sql-keyword",
    "Which SQL keyword removes duplicate rows from a result set?",
    ["DISTINCT", "distinct"],
)

Q.addNumerical(
    "join-rows",
    "A table with 12 rows is CROSS JOINed with a table of 5 rows. "
    "How many rows does the result have?",
    60,
)

# The first choice is the correct one; the rest are graded -100/(k-1).
Q.addMultipleChoice(
    "null-compare",
    "What does <code>NULL = NULL</code> evaluate to in standard SQL?",
    ["NULL", "TRUE", "FALSE", "an error"],
)

Q.addMatching(
    "clause-purpose",
    "Match each clause with what it does:",
    [
        ("WHERE", "filters rows before grouping"),
        ("HAVING", "filters groups after aggregation"),
        ("ORDER BY", "sorts the result"),
        ("LIMIT", "caps the number of rows returned"),
    ],
)

Q.close()

# A shareable, self-contained page showing names, answers and the correct
# choice first. Q.preview() would do the same into a temp file + browser.
preview_path = render_preview(Q, OUTPUT / "single_questions.html")
print(f"bank:    {Q.output_path}")
print(f"preview: {preview_path}")
