"""Bulk edits: literal text replacement and wrong-penalty rewrites."""

import pytest

from quizbank import (
    ValidationError,
    parse_bank,
    replace_text,
    replace_text_pattern,
    serialize_bank,
    set_wrong_penalty,
)



class TestReplaceText:
    def test_single_occurrence_in_matching_pair(self, rich_bank):
        count = replace_text(rich_bank, "Flux", "Radiant flux")
        assert count == 1
        units = next(q for q in rich_bank.questions if q.name == "units")
        assert units.payload.pairs[0] == ("Radiant flux", "W")

    def test_absent_text_changes_nothing(self, rich_bank):
        before = serialize_bank(rich_bank)
        assert replace_text(rich_bank, "not-in-the-bank", "x") == 0
        assert serialize_bank(rich_bank) == before

    def test_reverse_replacement_restores_bank(self, rich_bank):
        before = serialize_bank(rich_bank)
        replace_text(rich_bank, "Flux", "Radiant flux")
        replace_text(rich_bank, "Radiant flux", "Flux")
        assert serialize_bank(rich_bank) == before

    def test_counts_every_occurrence(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("alpha", "alpha or alpha?", ["alpha"])
        assert replace_text(bank, "alpha", "beta") == 4
        assert bank.questions[0].name == "beta"
        assert bank.questions[0].stem == "beta or beta?"
        assert bank.questions[0].payload.answers == ["beta"]

    def test_numerical_values_are_exempt(self, make_bank):
        bank = make_bank()
        bank.addNumerical("", "Compute the answer to everything", [42], 0.5)
        assert replace_text(bank, "42", "43") == 0
        assert bank.questions[0].payload.answers == [42]

    def test_empty_old_rejected(self, rich_bank):
        with pytest.raises(ValidationError):
            replace_text(rich_bank, "", "x")

    def test_regex_variant(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("", "Week 1 and week 2 and week 13", ["w"])
        assert replace_text_pattern(bank, r"week (\d+)", r"unit \1") == 2
        assert bank.questions[0].stem == "Week 1 and unit 2 and unit 13"

    def test_question_count_kinds_and_fractions_untouched(self, rich_bank):
        kinds = [q.kind for q in rich_bank.questions]
        replace_text(rich_bank, "a", "b")
        assert [q.kind for q in rich_bank.questions] == kinds
        mcq = next(q for q in rich_bank.questions if q.name == "pick-root")
        assert [c.fraction for c in mcq.payload.choices] == [100.0] + [-33.33333] * 3


class TestSetWrongPenalty:
    def test_all_multichoice_updated(self, make_bank):
        bank = make_bank(seed=1)
        for i in range(10):
            bank.addMultipleChoice(f"q{i}", f"Q{i}?", [f"r{i}", "w1", "w2", "w3"])
        assert set_wrong_penalty(bank, 0) == 10
        for question in bank.questions:
            fractions = sorted(c.fraction for c in question.payload.choices)
            assert fractions == [0.0, 0.0, 0.0, 100.0]

    def test_bank_without_multichoice_reports_zero(self, make_bank):
        bank = make_bank()
        bank.addShortAnswer("", "Q?", ["a"])
        bank.addNumerical("", "N?", [1])
        assert set_wrong_penalty(bank, 0) == 0

    def test_setting_current_value_is_byte_identical(self, rich_bank):
        before = serialize_bank(rich_bank)
        set_wrong_penalty(rich_bank, -100.0 / 3)
        assert serialize_bank(rich_bank) == before

    def test_correct_choice_and_other_kinds_untouched(self, rich_bank):
        set_wrong_penalty(rich_bank, -10)
        mcq = next(q for q in rich_bank.questions if q.name == "pick-root")
        assert mcq.payload.choices[0].fraction == 100.0
        assert all(c.fraction == -10 for c in mcq.payload.choices[1:])
        units = next(q for q in rich_bank.questions if q.name == "units")
        assert units.payload.pairs[0] == ("Flux", "W")

    @pytest.mark.parametrize("bad", [50, -101, 0.1, float("nan")])
    def test_out_of_range_rejected(self, rich_bank, bad):
        before = serialize_bank(rich_bank)
        with pytest.raises(ValidationError):
            set_wrong_penalty(rich_bank, bad)
        assert serialize_bank(rich_bank) == before


class TestComposition:
    def test_maintain_parse_serialize_pipeline(self, rich_bank):
        data = serialize_bank(rich_bank)
        bank = parse_bank(data)
        replace_text(bank, "Flux", "Radiant flux")
        set_wrong_penalty(bank, 0)
        again = parse_bank(serialize_bank(bank))
        assert serialize_bank(again) == serialize_bank(bank)
        assert "Radiant flux" in serialize_bank(again).decode()
