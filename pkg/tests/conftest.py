import pytest

from quizbank import MediaAsset, QuestionBank, embed_image

# Smallest valid PNG (1x1, RGBA): enough to exercise data-URI embedding.
PNG_1PX = (
    b"\x89PNG\r\n\x1a\n\x00\x00\x00\rIHDR\x00\x00\x00\x01\x00\x00\x00\x01"
    b"\x08\x06\x00\x00\x00\x1f\x15\xc4\x89\x00\x00\x00\nIDATx\x9cc\x00\x01"
    b"\x00\x00\x05\x00\x01\r\n-\xb4\x00\x00\x00\x00IEND\xaeB`\x82"
)


@pytest.fixture
def make_bank(tmp_path):
    """Factory for banks writing into the test's temp directory."""

    counter = {"n": 0}

    def factory(seed=None, name=None):
        counter["n"] += 1
        filename = name or f"bank{counter['n']}.xml"
        return QuestionBank(tmp_path / filename, seed=seed)

    return factory


def build_rich_bank(bank):
    """Fill a bank with all four kinds, categories, LaTeX and an image."""
    bank.addShortAnswer("capitals", "Capital of France?", ["Paris", "paris"])
    bank.setCategory("Algebra/Quadratics")
    bank.addNumerical("roots", "Solve \\(2x^2+4x-30=0\\)", [3, -5])
    bank.addMultipleChoice(
        "pick-root", "Select a solution for \\(2x^2+4x-30=0\\)", [3, 2, 4, 5]
    )
    bank.setCategory("Radiometry")
    bank.addMatching(
        "units",
        "Match magnitudes with units:",
        [
            ("Flux", "W"),
            ("Intensity", "W/sr"),
            ("Irradiance", "W/m^2"),
            ("Radiance", "W/(sr*m^2)"),
        ],
    )
    fragment = embed_image(MediaAsset(PNG_1PX, "image/png", alt_text="a dot"))
    bank.setCategory("")
    bank.addMultipleChoice(
        "dot", f"What is shown here? {fragment}", ["a dot", "a line", "a square", "a circle"]
    )
    return bank


@pytest.fixture
def rich_bank(make_bank):
    return build_rich_bank(make_bank(seed=7))
