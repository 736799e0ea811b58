"""Bulk edits on an existing XML bank: rename a term, change penalties.

Builds a small bank, then edits it through parse/serialize the way the
CLI does. The command-line equivalents are:

    quizbank maintain bank.xml replace-text "Radiant flux" "Flux"
    quizbank maintain bank.xml set-penalty 0
"""

from pathlib import Path

from quizbank import (
    QuestionBank,
    parse_bank,
    replace_text,
    serialize_bank,
    set_wrong_penalty,
)

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)
bank_path = OUTPUT / "radiometry.xml"

Q = QuestionBank(bank_path, seed=31)
Q.setCategory("Radiometry")
Q.addMatching(
    "units",
    "Match each quantity with its unit:",
    [("Flux", "W"), ("Intensity", "W/sr"), ("Irradiance", "W/m^2")],
)
Q.addMultipleChoice(
    "flux-unit", "What is the unit of Flux?", ["W", "W/sr", "W/m^2", "J"]
)
Q.addMultipleChoice(
    "sr-quantity", "Which quantity is given per steradian?", ["Intensity", "Flux", "Irradiance", "Energy"]
)
Q.close()

# Reload the written file, edit it, write it back.
bank = parse_bank(bank_path.read_bytes())

renamed = replace_text(bank, "Flux", "Radiant flux")
print(f"replaced 'Flux' -> 'Radiant flux' in {renamed} places")

touched = set_wrong_penalty(bank, 0)
print(f"removed the wrong-answer penalty on {touched} multiple-choice questions")

bank_path.write_bytes(serialize_bank(bank))
print(f"bank rewritten: {bank_path}")
