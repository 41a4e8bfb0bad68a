"""Aggregation and the derived gender-distribution statistics.

Scores are percentages of the total word count; the gap is the absolute
feminine/masculine score difference in percentage points. The attached
standard error is the two-proportion value ``sqrt((p_f(1-p_f)+p_m(1-p_m))/N)``
on the proportion scale, which reproduces the published per-language rows to
their printed precision; a dataset is skewed when the gap exceeds twice it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .matching import SampleCounts


@dataclass(frozen=True)
class GenderCounts:
    """Mergeable match totals; a commutative monoid under ``merge``."""

    fem: int = 0
    masc: int = 0
    uns: int = 0
    words: int = 0
    samples: int = 0
    samples_matched: int = 0

    def __add__(self, other: "GenderCounts") -> "GenderCounts":
        return GenderCounts(
            self.fem + other.fem,
            self.masc + other.masc,
            self.uns + other.uns,
            self.words + other.words,
            self.samples + other.samples,
            self.samples_matched + other.samples_matched,
        )

    @classmethod
    def from_sample(cls, counts: SampleCounts) -> "GenderCounts":
        return cls(
            fem=counts.fem,
            masc=counts.masc,
            uns=counts.uns,
            words=counts.words,
            samples=1,
            samples_matched=1 if counts.matched else 0,
        )


ZERO = GenderCounts()


def merge(a: GenderCounts, b: GenderCounts) -> GenderCounts:
    """Field-wise sum; identity element is the all-zero record."""
    return a + b


class Skew(enum.Enum):
    MASCULINE = "masculine"
    FEMININE = "feminine"
    BALANCED = "balanced"


@dataclass(frozen=True)
class GenderReport:
    """Derived statistics for one language/corpus pair.

    ``score_*`` and ``coverage`` are percentages, ``delta`` is in percentage
    points, and ``ste`` is on the proportion scale as published.
    """

    score_fem: float
    score_masc: float
    score_uns: float
    delta: float
    ste: float
    skew: Skew
    coverage: float
    words: int
    samples: int


def class_score(count: int, words: int) -> float:
    """Percentage of all words that matched the class; 0 on empty corpora."""
    if words == 0:
        return 0.0
    return 100.0 * count / words


def gender_gap(score_fem: float, score_masc: float) -> float:
    return abs(score_fem - score_masc)


def standard_error(score_fem: float, score_masc: float, words: int) -> float:
    """Two-proportion standard error from percentage scores and word count."""
    if words < 1:
        raise ValueError("standard error undefined for an empty corpus")
    p_f = score_fem / 100.0
    p_m = score_masc / 100.0
    return math.sqrt((p_f * (1.0 - p_f) + p_m * (1.0 - p_m)) / words)


def classify_skew(score_fem: float, score_masc: float, ste: float) -> Skew:
    """Skew label: a gap above twice the standard error decides a direction,
    anything else counts as balanced."""
    threshold = 2.0 * ste
    if score_masc - score_fem > threshold:
        return Skew.MASCULINE
    if score_fem - score_masc > threshold:
        return Skew.FEMININE
    return Skew.BALANCED


def coverage(samples_matched: int, samples: int) -> float:
    """Percentage of samples with at least one match; 0 on empty corpora."""
    if samples == 0:
        return 0.0
    return 100.0 * samples_matched / samples


def finalize(counts: GenderCounts) -> GenderReport:
    """Turn aggregated counts into the reported statistics.

    An empty corpus (zero words) yields an all-zero, balanced report rather
    than an error so multi-language batch runs keep going.
    """
    score_fem = class_score(counts.fem, counts.words)
    score_masc = class_score(counts.masc, counts.words)
    score_uns = class_score(counts.uns, counts.words)
    delta = gender_gap(score_fem, score_masc)
    ste = standard_error(score_fem, score_masc, counts.words) if counts.words else 0.0
    return GenderReport(
        score_fem=score_fem,
        score_masc=score_masc,
        score_uns=score_uns,
        delta=delta,
        ste=ste,
        skew=classify_skew(score_fem, score_masc, ste),
        coverage=coverage(counts.samples_matched, counts.samples),
        words=counts.words,
        samples=counts.samples,
    )
