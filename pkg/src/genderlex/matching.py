"""Per-sample scanning: find lexicon hits and tally class counters.

One hit increments every class the matched term belongs to, so a term that
is both masculine and unspecified raises two counters from a single match.
Matches are leftmost-longest and never overlap. Delimited matching is
whole-token only; substring matching applies only to unsegmented script runs
(Latin stretches inside such text are counted but not substring-matched).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .lexicon import FEM_BIT, MASC_BIT, UNS_BIT, GenderClass, MatchIndex, classes_of
from .normalize import DEFAULT_CONFIG, NormalizationConfig
from .segmentation import (
    StrategyKind,
    TokenSpan,
    WordList,
    _greedy_word_count,
    _norm_token,
    _split_runs,
    count_words,
    tokenize_words,
)


@dataclass(frozen=True)
class SampleCounts:
    fem: int = 0
    masc: int = 0
    uns: int = 0
    words: int = 0
    matched: bool = False


@dataclass(frozen=True)
class MatchAnnotation:
    """A matched occurrence; offsets are code point indices into the sample."""

    term: str
    classes: frozenset[GenderClass]
    start: int
    end: int


def _project_run(run: str, case_fold: bool) -> tuple[str, list[int]]:
    """Normalize a script run per character, tracking source offsets.

    Exact for the supported unsegmented scripts, where canonical composition
    never crosses character boundaries; in practice the projection is the
    identity for Han, Kana, and Thai text.
    """
    parts = []
    src = []
    for j, ch in enumerate(run):
        piece = unicodedata.normalize("NFC", ch)
        if case_fold:
            piece = unicodedata.normalize("NFC", piece.casefold())
        parts.append(piece)
        src.extend([j] * len(piece))
    return "".join(parts), src


def scan_tokenized(spans: Sequence[TokenSpan], index: MatchIndex) -> list[MatchAnnotation]:
    """Whole-token n-gram matches over delimited word spans."""
    texts = [span.text for span in spans]
    annotations = []
    for pos, length, mask in kernels.scan_tokens(
        texts, index.unigrams, index.ngrams, index.max_ngram
    ):
        annotations.append(
            MatchAnnotation(
                term=" ".join(texts[pos:pos + length]),
                classes=classes_of(mask),
                start=spans[pos].start,
                end=spans[pos + length - 1].end,
            )
        )
    return annotations


def scan_unsegmented(
    run: TokenSpan, index: MatchIndex, config: NormalizationConfig = DEFAULT_CONFIG
) -> list[MatchAnnotation]:
    """Substring matches inside one unsegmented script run."""
    if index.matcher is None:
        return []
    norm, src = _project_run(run.text, config.case_fold)
    annotations = []
    for start, end, mask in index.matcher.find_leftmost_longest(norm):
        annotations.append(
            MatchAnnotation(
                term=norm[start:end],
                classes=classes_of(mask),
                start=run.start + src[start],
                end=run.start + src[end - 1] + 1,
            )
        )
    return annotations


def count_sample(
    text: str,
    index: MatchIndex,
    config: NormalizationConfig = DEFAULT_CONFIG,
    word_list: Optional[WordList] = None,
) -> SampleCounts:
    """Tokenize, match, and tally one sample (the hot path)."""
    fold = config.case_fold
    fem = masc = uns = 0
    hits = 0
    if index.strategy.kind is StrategyKind.DELIMITED:
        spans = kernels.word_spans(text)
        tokens = [_norm_token(text[a:b], fold) for a, b in spans]
        words = len(tokens)
        for _, _, mask in kernels.scan_tokens(
            tokens, index.unigrams, index.ngrams, index.max_ngram
        ):
            hits += 1
            fem += mask & FEM_BIT
            masc += (mask & MASC_BIT) >> 1
            uns += (mask & UNS_BIT) >> 2
    else:
        words = 0
        matcher = index.matcher
        for seg_start, seg_end, is_run in _split_runs(text, index.strategy.run_ranges):
            chunk = text[seg_start:seg_end]
            if is_run:
                if word_list is not None and word_list.max_len > 0:
                    words += _greedy_word_count(chunk, word_list)
                else:
                    words += kernels.grapheme_count(chunk)
                if matcher is not None:
                    norm, _ = _project_run(chunk, fold)
                    for _, _, mask in matcher.find_leftmost_longest(norm):
                        hits += 1
                        fem += mask & FEM_BIT
                        masc += (mask & MASC_BIT) >> 1
                        uns += (mask & UNS_BIT) >> 2
            else:
                words += len(kernels.word_spans(chunk))
    return SampleCounts(fem, masc, uns, words, hits > 0)


def annotate_sample(
    text: str,
    index: MatchIndex,
    config: NormalizationConfig = DEFAULT_CONFIG,
    word_list: Optional[WordList] = None,
) -> tuple[SampleCounts, list[MatchAnnotation]]:
    """Counts plus the annotations that produced them (explain mode)."""
    spans = tokenize_words(text, index.strategy, config)
    annotations: list[MatchAnnotation] = []
    if index.strategy.kind is StrategyKind.DELIMITED:
        annotations = scan_tokenized(spans, index)
    else:
        for span in spans:
            if span.is_run:
                annotations.extend(scan_unsegmented(span, index, config))
    fem = masc = uns = 0
    for annotation in annotations:
        fem += GenderClass.FEMININE in annotation.classes
        masc += GenderClass.MASCULINE in annotation.classes
        uns += GenderClass.UNSPECIFIED in annotation.classes
    counts = SampleCounts(
        fem=fem,
        masc=masc,
        uns=uns,
        words=count_words(spans, index.strategy, word_list),
        matched=bool(annotations),
    )
    annotations.sort(key=lambda a: a.start)
    return counts, annotations
