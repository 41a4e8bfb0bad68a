"""Corpus-level orchestration: stream, count in parallel, merge.

Workers each hold an immutable match index built once per process; the
reader streams sample batches to them and a single reducer sums the
returned counts. Because merging integer counts is commutative and
associative, results are bit-identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .ingestion import CorpusReader, CorpusSpec, Sample, next_batch, open_corpus
from .lexicon import Lexicon, MatchIndex, build_match_index
from .matching import MatchAnnotation, SampleCounts, annotate_sample, count_sample
from .normalize import DEFAULT_CONFIG, NormalizationConfig
from .segmentation import WordList
from .statistics import ZERO, GenderCounts

DEFAULT_BATCH_SIZE = 256


@dataclass
class AnalysisResult:
    counts: GenderCounts
    decode_errors: int
    skipped_records: int
    bytes_read: int
    runtime_s: float


_worker_index: Optional[MatchIndex] = None
_worker_config: NormalizationConfig = DEFAULT_CONFIG
_worker_word_list: Optional[WordList] = None


def _init_worker(lexicon: Lexicon, config: NormalizationConfig,
                 word_list: Optional[WordList]) -> None:
    global _worker_index, _worker_config, _worker_word_list
    _worker_index = build_match_index(lexicon, config=config)
    _worker_config = config
    _worker_word_list = word_list


def _count_batch(texts: list[str]) -> tuple[int, int, int, int, int, int]:
    fem = masc = uns = words = matched = 0
    index = _worker_index
    for text in texts:
        counts = count_sample(text, index, _worker_config, _worker_word_list)
        fem += counts.fem
        masc += counts.masc
        uns += counts.uns
        words += counts.words
        matched += counts.matched
    return fem, masc, uns, words, len(texts), matched


def _batches(reader: CorpusReader, batch_size: int) -> Iterator[list[str]]:
    while True:
        batch = next_batch(reader, batch_size)
        if not batch:
            return
        yield [sample.text for sample in batch]


def analyze_corpus(
    lexicon: Lexicon,
    spec: CorpusSpec,
    *,
    config: NormalizationConfig = DEFAULT_CONFIG,
    word_list: Optional[WordList] = None,
    workers: int = 1,
    batch_size: int = DEFAULT_BATCH_SIZE,
) -> AnalysisResult:
    """Stage one over a whole corpus, returning merged counts and tallies."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    started = time.perf_counter()
    reader = open_corpus(spec)
    total = ZERO
    if workers == 1:
        index = build_match_index(lexicon, config=config)
        fem = masc = uns = words = samples = matched = 0
        for sample in reader:
            counts = count_sample(sample.text, index, config, word_list)
            fem += counts.fem
            masc += counts.masc
            uns += counts.uns
            words += counts.words
            samples += 1
            matched += counts.matched
        total = GenderCounts(fem, masc, uns, words, samples, matched)
    else:
        with multiprocessing.Pool(
            workers, initializer=_init_worker, initargs=(lexicon, config, word_list)
        ) as pool:
            for part in pool.imap_unordered(_count_batch, _batches(reader, batch_size)):
                total = total + GenderCounts(*part)
    return AnalysisResult(
        counts=total,
        decode_errors=reader.decode_errors,
        skipped_records=reader.skipped_records,
        bytes_read=reader.bytes_read,
        runtime_s=time.perf_counter() - started,
    )


def explain_corpus(
    lexicon: Lexicon,
    spec: CorpusSpec,
    *,
    config: NormalizationConfig = DEFAULT_CONFIG,
    word_list: Optional[WordList] = None,
) -> Iterator[tuple[Sample, SampleCounts, list[MatchAnnotation]]]:
    """Annotated pass over a corpus, in ordinal order (single-threaded)."""
    index = build_match_index(lexicon, config=config)
    for sample in open_corpus(spec):
        counts, annotations = annotate_sample(sample.text, index, config, word_list)
        yield sample, counts, annotations
