"""Fill-in-the-blank questions generated from source code and a token list.

One token is picked per question and every occurrence of it in the code
is blanked out; the alternatives are the blanked token, the other tokens
and the extra distractors.
"""

from pathlib import Path

from quizbank import QuestionBank, render_preview

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)

code = """
def binary_search(items, target):
    lo, hi = 0, len(items)
    while lo < hi:
        mid = (lo + hi) // 2
        if items[mid] < target:
            lo = mid + 1
        else:
            hi = mid
    return lo
"""

tokens = ["lo", "hi", "mid"]
distractors = ["target", "items", "pivot"]

Q = QuestionBank(OUTPUT / "complete_code.xml", seed=5)
Q.setCategory("Algorithms/Searching")
Q.addCompleteCode(
    "binary-search-blanks",
    "Complete this function: <p><pre>%s</pre>",
    code,
    tokens,
    distractors,
)
Q.close()

render_preview(Q, OUTPUT / "complete_code.html")
print(f"bank: {Q.output_path} ({len(Q.questions)} questions)")
