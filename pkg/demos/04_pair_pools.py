"""Random questions from (key, answer) pairs.

The stem has a fixed pattern and a varying key; %s marks where the key
goes. Distractors come from the other answers plus an optional extra
list, and never equal the chosen answer, even when several keys share
one answer (like the two French cities below).
"""

from pathlib import Path

from quizbank import QuestionBank

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)

Q = QuestionBank(OUTPUT / "pairs.xml", seed=99)

Q.setCategory("Geography/Cities")
cities = [
    ("Lyon", "France"),
    ("Marseille", "France"),  # shares its answer with Lyon: that's fine
    ("Turin", "Italy"),
    ("Porto", "Portugal"),
    ("Valencia", "Spain"),
]
Q.addMultipleChoiceFromPairs(
    "city-country",
    "In which country is <b>%s</b>?",
    cities,
    extra_distractors=["Greece", "Austria", "Croatia"],
)

Q.setCategory("Python/Stdlib")
modules = [
    ("json", "Encode and decode JSON documents."),
    ("pathlib", "Object-oriented filesystem paths."),
    ("itertools", "Building blocks for fast iteration."),
    ("argparse", "Parse command-line arguments."),
    ("tempfile", "Create temporary files and directories."),
    ("base64", "Encode binary data as printable text."),
]
Q.addMultipleChoiceFromPairs(
    "stdlib-purpose",
    "What does the <code>%s</code> module do?",
    modules,
)

Q.close()
print(f"bank: {Q.output_path} ({len(Q.questions)} questions)")
