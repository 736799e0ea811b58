"""Random multiple-choice generation from instructor-provided pools.

Vocabulary used throughout this module: two generated questions are
*unique* when their correct answers differ (their distractors may
overlap), and *distinct* when they differ in at least one choice. Choice
order inside a question does not count, since the importing LMS shuffles
choices itself.

A pool with c correct answers and d usable distractors therefore supports
up to c unique questions and up to c * C(d, 3) distinct ones. Every
generator defaults to producing the c unique questions; asking for more
keeps cycling the correct answers while rejection-sampling distractor
subsets against everything already emitted, so all questions of one call
stay pairwise distinct.

All comparisons (duplicates, collisions, distinctness) use trimmed exact
string comparison of the rendered texts.
"""

from __future__ import annotations

import math
from itertools import combinations

from .errors import CapacityError, SamplingError, ValidationError
from .model import normalize, render_text

DISTRACTORS_PER_QUESTION = 3

# Attempts per question before falling back to exhaustive enumeration of
# the remaining subsets (and, if even that is empty, giving up with a
# warning). Keeps adversarial pools from looping forever.
RESAMPLE_LIMIT = 100

# Replacement for blanked-out tokens. The plain marker reads fine in
# <pre>/code contexts and plain text; the span variant renders as an
# underlined gap in proportional HTML text.
BLANK_MARKER = "________"
BLANK_MARKER_HTML = (
    '<span style="display:inline-block;min-width:6em;'
    'border-bottom:1px solid currentColor">&nbsp;</span>'
)


def count_unique(c: int) -> int:
    """Number of unique questions a pool with c correct answers supports."""
    if not isinstance(c, int) or isinstance(c, bool) or c < 1:
        raise ValidationError(f"correct-answer count must be a positive integer, got {c!r}")
    return c


def count_distinct(c: int, d: int) -> int:
    """Number of distinct questions for c correct answers and d distractors."""
    count_unique(c)
    if not isinstance(d, int) or isinstance(d, bool) or d < 3:
        raise ValidationError(
            f"distractor count must be an integer >= 3 (3 are drawn per question), got {d!r}"
        )
    return c * math.comb(d, DISTRACTORS_PER_QUESTION)


def sample_distractors(pool, k, exclude, rng) -> list[str]:
    """Draw k pool items, uniformly over the valid k-subsets.

    Pool items are compared after rendering: duplicates collapse, and any
    item whose trimmed text appears in ``exclude`` is unavailable. Raises
    SamplingError when fewer than k usable items remain.
    """
    excluded = {normalize(render_text(e)) for e in exclude}
    valid = [t for t in _unique_texts(pool) if normalize(t) not in excluded]
    if len(valid) < k:
        raise SamplingError(
            f"need {k} distractors but only {len(valid)} usable candidates remain"
        )
    return rng.sample(valid, k)


# -- the three generators ----------------------------------------------------


def generate_from_lists(bank, title, question, correct, distractors, num_questions=-1):
    correct_texts = _unique_texts(correct)
    distractor_texts = _unique_texts(distractors)
    if not correct_texts:
        raise ValidationError("the correct-answer list is empty")
    if len(distractor_texts) < DISTRACTORS_PER_QUESTION:
        raise ValidationError(
            f"need at least {DISTRACTORS_PER_QUESTION} distractors, "
            f"got {len(distractor_texts)}"
        )
    overlap = {normalize(t) for t in correct_texts} & {
        normalize(t) for t in distractor_texts
    }
    if overlap:
        raise ValidationError(
            f"correct answers and distractors overlap: {sorted(overlap)}"
        )

    c = len(correct_texts)
    capacity = count_distinct(c, len(distractor_texts))
    wanted = _resolve_count(num_questions, c, capacity)

    order = list(correct_texts)
    bank.rng.shuffle(order)
    used: set = set()
    added = 0
    for i in range(wanted):
        correct_text = order[i % c]
        picks = _draw_distractor_subset(
            bank, distractor_texts, correct_text, normalize(correct_text), used
        )
        if picks is None:
            bank.warn(
                f"stopping after {added} questions: no further distinct "
                f"distractor combination for {correct_text!r}"
            )
            break
        used.add((normalize(correct_text), frozenset(normalize(p) for p in picks)))
        bank._append_generated_mcq(title, question, correct_text, picks)
        added += 1
    return added


def generate_from_pairs(
    bank, title, pattern, pairs, extra_distractors=(), num_questions=-1
):
    _require_single_placeholder(pattern)
    pairs = list(pairs)
    if not pairs:
        raise ValidationError("at least one (key, answer) pair is required")
    rendered = [(render_text(k), render_text(a)) for k, a in pairs]
    extras = _unique_texts(extra_distractors)

    # Nominal per-key pool size: the other answers plus the extras.
    c = len(rendered)
    d = c - 1 + len(extras)
    if d < DISTRACTORS_PER_QUESTION:
        raise ValidationError(
            f"per-key distractor pool has size {d} (other answers plus extras); "
            f"need at least {DISTRACTORS_PER_QUESTION}"
        )
    capacity = c * math.comb(d, DISTRACTORS_PER_QUESTION)

    order = list(range(c))
    bank.rng.shuffle(order)

    # Answers need not be injective, so a key's usable pool can shrink
    # below 3 once entries matching its own answer are filtered out.
    usable = []
    for idx in order:
        key_text, answer_text = rendered[idx]
        pool = [a for j, (_, a) in enumerate(rendered) if j != idx] + extras
        answer_norm = normalize(answer_text)
        usable_pool = [
            t for t in _unique_texts(pool) if normalize(t) != answer_norm
        ]
        if len(usable_pool) < DISTRACTORS_PER_QUESTION:
            bank.warn(
                f"skipping key {key_text!r}: only {len(usable_pool)} usable "
                f"distractors after removing entries equal to its answer"
            )
            continue
        usable.append((idx, key_text, answer_text, usable_pool))
    if not usable:
        raise SamplingError(
            "no key has enough usable distractors; provide more pairs or extra distractors"
        )

    wanted = _resolve_count(num_questions, len(usable), capacity)
    used: set = set()
    added = 0
    for i in range(wanted):
        _, key_text, answer_text, pool = usable[i % len(usable)]
        # Distinctness is judged on the choices alone, so two keys sharing
        # an answer (non-injective input) may never reuse a distractor set.
        answer_norm = normalize(answer_text)
        picks = _draw_distractor_subset(bank, pool, answer_text, answer_norm, used)
        if picks is None:
            bank.warn(
                f"stopping after {added} questions: no further distinct "
                f"distractor combination for key {key_text!r}"
            )
            break
        used.add((answer_norm, frozenset(normalize(p) for p in picks)))
        stem = pattern.replace("%s", key_text, 1)
        bank._append_generated_mcq(title, stem, answer_text, picks)
        added += 1
    return added


def generate_complete_code(
    bank,
    title,
    pattern,
    source_text,
    tokens,
    extra_distractors=(),
    num_questions=-1,
    blank=None,
):
    _require_single_placeholder(pattern)
    if not isinstance(source_text, str) or not source_text:
        raise ValidationError("source text must be a non-empty string")
    blank = BLANK_MARKER if blank is None else blank
    token_texts = _unique_texts(tokens)
    if not token_texts:
        raise ValidationError("the token list is empty")
    extras = _unique_texts(extra_distractors)

    pools = {}
    for token in token_texts:
        if token not in source_text:
            raise ValidationError(f"token {token!r} does not occur in the source text")
        token_norm = normalize(token)
        pool = [
            t
            for t in _unique_texts([o for o in token_texts if o != token] + extras)
            if normalize(t) != token_norm
        ]
        if len(pool) < DISTRACTORS_PER_QUESTION:
            raise ValidationError(
                f"token {token!r} has only {len(pool)} usable distractors; "
                f"need at least {DISTRACTORS_PER_QUESTION}"
            )
        pools[token] = pool

    c = len(token_texts)
    capacity = sum(
        math.comb(len(pool), DISTRACTORS_PER_QUESTION) for pool in pools.values()
    )
    wanted = _resolve_count(num_questions, c, capacity)

    order = list(token_texts)
    bank.rng.shuffle(order)
    used: set = set()
    added = 0
    for i in range(wanted):
        token = order[i % c]
        picks = _draw_distractor_subset(bank, pools[token], token, normalize(token), used)
        if picks is None:
            bank.warn(
                f"stopping after {added} questions: no further distinct "
                f"distractor combination for token {token!r}"
            )
            break
        used.add((normalize(token), frozenset(normalize(p) for p in picks)))
        stem = pattern.replace("%s", source_text.replace(token, blank), 1)
        bank._append_generated_mcq(title, stem, token, picks)
        added += 1
    return added


# -- shared machinery ---------------------------------------------------------


def _unique_texts(items) -> list[str]:
    """Render items to text, collapsing duplicates, preserving first-seen order.

    Unordered collections are ordered by their rendered text so that
    generation stays deterministic under a fixed seed.
    """
    if isinstance(items, (set, frozenset)):
        items = sorted(items, key=render_text)
    seen: dict[str, str] = {}
    for item in items:
        text = render_text(item)
        key = normalize(text)
        if key not in seen:
            seen[key] = text
    return list(seen.values())


def _resolve_count(num_questions, default, capacity):
    if not isinstance(num_questions, int) or isinstance(num_questions, bool):
        raise ValidationError(f"question count must be an integer, got {num_questions!r}")
    if num_questions < -1:
        raise ValidationError(f"question count must be >= -1, got {num_questions}")
    wanted = default if num_questions == -1 else num_questions
    if wanted > capacity:
        raise CapacityError(
            f"requested {wanted} questions but the pool supports at most "
            f"{capacity} distinct questions"
        )
    return wanted


def _draw_distractor_subset(bank, pool, correct_text, signature_key, used):
    """Pick 3 distractors not yet emitted with this correct answer.

    Rejection-samples first; when the remaining space is dense enough that
    RESAMPLE_LIMIT draws keep colliding, enumerates the unused subsets and
    picks one at random. Returns None when none remain.
    """
    correct_norm = normalize(correct_text)
    for _ in range(RESAMPLE_LIMIT):
        picks = sample_distractors(pool, DISTRACTORS_PER_QUESTION, {correct_text}, bank.rng)
        texts = [correct_text] + picks
        if len({normalize(t) for t in texts}) < len(texts):
            bank.warn("duplicated choice text in sampled question; resampling")
            continue
        if (signature_key, frozenset(normalize(p) for p in picks)) in used:
            continue
        return picks
    valid = [t for t in _unique_texts(pool) if normalize(t) != correct_norm]
    remaining = [
        combo
        for combo in combinations(valid, DISTRACTORS_PER_QUESTION)
        if (signature_key, frozenset(normalize(p) for p in combo)) not in used
    ]
    if not remaining:
        return None
    return list(bank.rng.choice(remaining))


def _require_single_placeholder(pattern) -> None:
    if not isinstance(pattern, str) or pattern.count("%s") != 1:
        raise ValidationError(
            "the question pattern must contain exactly one %s placeholder"
        )
