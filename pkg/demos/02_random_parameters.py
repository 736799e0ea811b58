"""Single questions with randomized content: a fresh quadratic every run.

The bank's own RNG drives the randomness, so rebuilding with the same
seed reproduces the identical XML file (try: quizbank build
demos/02_random_parameters.py --seed 7 --out /tmp/quad.xml, twice).
"""

from pathlib import Path

from quizbank import QuestionBank

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)

Q = QuestionBank(OUTPUT / "random_quadratics.xml", seed=7)
Q.setCategory("Algebra/Quadratics")

for _ in range(5):
    # Pick integer roots, expand (x - r1)(x - r2) = x^2 + bx + c.
    r1 = Q.rng.randint(2, 9)
    r2 = -Q.rng.randint(2, 9)
    b = -(r1 + r2)
    c = r1 * r2
    b_term = f"{b:+d}x" if b else ""
    stem = f"Give one solution of \\( x^2{b_term}{c:+d} = 0 \\)"
    Q.addNumerical("", stem, [r1, r2])

    distractors = sorted({r1 + 1, r1 - 1, r2 + 1, r2 - 1} - {r1, r2})
    Q.addMultipleChoice("", f"Which value solves \\( x^2{b_term}{c:+d} = 0 \\)?",
                        [r1] + distractors[:3])

Q.close()
print(f"bank: {Q.output_path} ({len(Q.questions)} questions)")
