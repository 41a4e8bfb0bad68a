"""Word segmentation strategies and word counting.

Delimited languages use the default Unicode word-boundary rules; the four
languages written without word delimiters (Han, Kana, Thai scripts) are
handled as script runs: embedded delimited-script stretches are tokenized
normally, while runs of the unsegmented script become single flagged spans
that the matcher scans as substrings. Their word-count contribution is the
grapheme-cluster count, or greedy maximal matching when a word list is given
(a documented approximation of the dictionary segmenters it replaces).
"""

from __future__ import annotations

import enum
import logging
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import kernels
from ._uniprops import ALNUM_BIT, GB_EXTEND, GB_MASK, GB_SHIFT, GB_SPACINGMARK, lookup
from .normalize import DEFAULT_CONFIG, NormalizationConfig, normalize_term

log = logging.getLogger(__name__)

#: the languages the lexicon work covers, as <iso639-3>_<script> codes
SUPPORTED_LANGUAGES = frozenset({
    "arb_Arab", "asm_Beng", "bel_Cyrl", "ben_Beng", "bul_Cyrl", "cat_Latn",
    "ces_Latn", "ckb_Arab", "cmn_Hans", "cym_Latn", "dan_Latn", "deu_Latn",
    "ell_Grek", "eng_Latn", "est_Latn", "fin_Latn", "fra_Latn", "gle_Latn",
    "hin_Deva", "hun_Latn", "ind_Latn", "ita_Latn", "jpn_Jpan", "kan_Knda",
    "kat_Geor", "khk_Cyrl", "kir_Cyrl", "lit_Latn", "lug_Latn", "lvs_Latn",
    "mar_Deva", "mlt_Latn", "nld_Latn", "pan_Guru", "pes_Arab", "pol_Latn",
    "por_Latn", "ron_Latn", "rus_Cyrl", "slk_Latn", "slv_Latn", "spa_Latn",
    "swe_Latn", "swh_Latn", "tam_Taml", "tel_Telu", "tgl_Latn", "tha_Thai",
    "tur_Latn", "ukr_Cyrl", "urd_Arab", "uzn_Latn", "vie_Latn", "yue_Hant",
    "zul_Latn",
})

_HAN_RANGES = (
    (0x3005, 0x3008), (0x3400, 0x4DC0), (0x4E00, 0xA000), (0xF900, 0xFB00),
    (0x20000, 0x2A6E0), (0x2A700, 0x2EBF0), (0x2F800, 0x2FA20),
    (0x30000, 0x31350),
)
_KANA_RANGES = ((0x3041, 0x3100), (0x31F0, 0x3200), (0xFF66, 0xFFA0))
_THAI_RANGES = ((0x0E01, 0x0E5C),)

#: script ranges scanned as substring runs, per unsegmented language
UNSEGMENTED_RANGES = {
    "cmn_Hans": _HAN_RANGES,
    "yue_Hant": _HAN_RANGES,
    "jpn_Jpan": _HAN_RANGES + _KANA_RANGES,
    "tha_Thai": _THAI_RANGES,
}


class StrategyKind(enum.Enum):
    DELIMITED = "delimited"
    UNSEGMENTED = "unsegmented"


@dataclass(frozen=True)
class SegmentationStrategy:
    kind: StrategyKind
    language: str

    @property
    def run_ranges(self) -> tuple[tuple[int, int], ...]:
        return UNSEGMENTED_RANGES.get(self.language, ())


@dataclass(frozen=True)
class TokenSpan:
    """One countable unit with offsets into the original sample.

    ``text`` is the normalized token for word spans; run spans (``is_run``)
    carry the raw script run, which the matcher normalizes itself so match
    offsets stay valid. Offsets are code point indices.
    """

    text: str
    start: int
    end: int
    is_run: bool = False


def detect_strategy(language: str) -> SegmentationStrategy:
    """Matching strategy for a language code; unknown codes fall back to
    delimited segmentation with a warning."""
    if language in UNSEGMENTED_RANGES:
        return SegmentationStrategy(StrategyKind.UNSEGMENTED, language)
    if language not in SUPPORTED_LANGUAGES:
        log.warning("unknown language code %r: assuming delimited script", language)
    return SegmentationStrategy(StrategyKind.DELIMITED, language)


def _norm_token(raw: str, case_fold: bool) -> str:
    # tokens contain no whitespace, so this equals normalize_term
    if raw.isascii():
        return raw.lower() if case_fold else raw
    return normalize_term(raw, NormalizationConfig(case_fold))


def _split_runs(text: str, ranges: Sequence[tuple[int, int]]) -> list[tuple[int, int, bool]]:
    """Partition text into (start, end, is_run) stretches.

    A run is a maximal stretch of target-script letters/digits plus attached
    combining marks; a candidate with no letter or digit is demoted to plain
    text so it cannot contribute to word counts.
    """
    out = []
    seg_start = 0
    in_run = False
    has_alnum = False
    for i, ch in enumerate(text):
        cp = ord(ch)
        props = lookup(cp)
        gb = (props >> GB_SHIFT) & GB_MASK
        member = any(lo <= cp < hi for lo, hi in ranges) and (
            props & ALNUM_BIT or gb in (GB_EXTEND, GB_SPACINGMARK)
        )
        if member != in_run:
            if i > seg_start:
                out.append((seg_start, i, in_run and has_alnum))
            seg_start = i
            in_run = member
            has_alnum = False
        has_alnum = has_alnum or bool(props & ALNUM_BIT)
    if len(text) > seg_start:
        out.append((seg_start, len(text), in_run and has_alnum))
    return out


def tokenize_words(
    text: str,
    strategy: SegmentationStrategy,
    config: NormalizationConfig = DEFAULT_CONFIG,
) -> list[TokenSpan]:
    """Split a sample into countable spans, in text order."""
    fold = config.case_fold
    if strategy.kind is StrategyKind.DELIMITED:
        return [
            TokenSpan(_norm_token(text[a:b], fold), a, b)
            for a, b in kernels.word_spans(text)
        ]
    spans = []
    for seg_start, seg_end, is_run in _split_runs(text, strategy.run_ranges):
        if is_run:
            spans.append(TokenSpan(text[seg_start:seg_end], seg_start, seg_end, is_run=True))
        else:
            chunk = text[seg_start:seg_end]
            spans.extend(
                TokenSpan(_norm_token(chunk[a:b], fold), seg_start + a, seg_start + b)
                for a, b in kernels.word_spans(chunk)
            )
    return spans


@dataclass(frozen=True)
class WordList:
    """Greedy maximal-matching dictionary for unsegmented-run word counts."""

    words: frozenset[str]
    max_len: int

    @classmethod
    def from_words(cls, words) -> "WordList":
        normalized = frozenset(w for w in (normalize_term(x) for x in words) if w)
        max_len = max((len(w) for w in normalized), default=0)
        return cls(normalized, max_len)


def load_word_list(path) -> WordList:
    """Load a one-word-per-line UTF-8 dictionary, normalized like lexicon
    terms (matched against raw run text, which these scripts leave intact)."""
    with open(Path(path), encoding="utf-8") as fh:
        return WordList.from_words(line.strip() for line in fh if line.strip())


def _greedy_word_count(run: str, word_list: WordList) -> int:
    starts = [s for s, _ in kernels.grapheme_spans(run)]
    starts.append(len(run))
    words = word_list.words
    max_len = word_list.max_len
    count = 0
    i = 0
    n = len(run)
    while i < n:
        hit = 0
        top = max_len if max_len < n - i else n - i
        for length in range(top, 0, -1):
            if run[i:i + length] in words:
                hit = length
                break
        count += 1
        if hit:
            i += hit
        else:
            i = starts[bisect_right(starts, i)]
    return count


def count_words(
    spans: Sequence[TokenSpan],
    strategy: SegmentationStrategy,
    word_list: Optional[WordList] = None,
) -> int:
    """Denominator for the class scores: one per word span, and for script
    runs the grapheme-cluster count or the greedy dictionary segmentation."""
    total = 0
    for span in spans:
        if span.is_run:
            if word_list is not None and word_list.max_len > 0:
                total += _greedy_word_count(span.text, word_list)
            else:
                total += kernels.grapheme_count(span.text)
        else:
            total += 1
    return total
