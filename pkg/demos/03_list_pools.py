"""Random questions from correct/distractor lists, with variant counting.

The stem states a property; one alternative satisfies it, three do not.
The two lists below split HTTP status codes by "is a client error".
"""

from pathlib import Path

from quizbank import QuestionBank, count_distinct, count_unique

OUTPUT = Path(__file__).parent / "output"
OUTPUT.mkdir(exist_ok=True)

client_errors = ["400", "401", "403", "404", "409", "418"]
not_client_errors = ["200", "201", "204", "301", "302", "500", "502", "503", "504", "100"]

c, d = len(client_errors), len(not_client_errors)
print(f"pool supports {count_unique(c)} unique questions "
      f"and {count_distinct(c, d)} distinct ones")

Q = QuestionBank(OUTPUT / "status_codes.xml", seed=2024)
Q.setCategory("Networking/HTTP")

# Default: one unique question per correct answer (6 here).
Q.addMultipleChoiceFromLists(
    "client-error",
    "Select the HTTP status code that is a <b>client error</b>:",
    client_errors,
    not_client_errors,
)

# Asking for more keeps every question distinct while correct answers cycle.
Q.addMultipleChoiceFromLists(
    "client-error-extra",
    "Pick the <b>client error</b> status code:",
    client_errors,
    not_client_errors,
    18,
)

Q.close()
print(f"bank: {Q.output_path} ({len(Q.questions)} questions)")
