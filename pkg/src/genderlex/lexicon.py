"""Gendered-noun lexicons: parsing, validation, and match indexes.

Lexicon files are UTF-8 TSV, one entry per line::

    term<TAB>class[;class...][<TAB>sg|pl]

Classes are ``feminine``, ``masculine``, ``unspecified``; a term may carry
several at once (Spanish "abuelos" is masculine and unspecified). The third
column optionally tags grammatical number so validation can summarize the
class/number breakdown. ``#`` comments and blank lines are skipped. Repeated
surfaces union their class sets.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from . import kernels
from .automaton import SubstringMatcher
from .normalize import DEFAULT_CONFIG, NormalizationConfig, normalize_term
from .segmentation import SegmentationStrategy, StrategyKind, detect_strategy

log = logging.getLogger(__name__)


class GenderClass(enum.Enum):
    FEMININE = "feminine"
    MASCULINE = "masculine"
    UNSPECIFIED = "unspecified"


FEM_BIT = 1
MASC_BIT = 2
UNS_BIT = 4

_CLASS_BIT = {
    GenderClass.FEMININE: FEM_BIT,
    GenderClass.MASCULINE: MASC_BIT,
    GenderClass.UNSPECIFIED: UNS_BIT,
}
_NAME_TO_CLASS = {c.value: c for c in GenderClass}
_NUMBER_TAGS = ("sg", "pl")


def mask_of(classes: Iterable[GenderClass]) -> int:
    mask = 0
    for cls in classes:
        mask |= _CLASS_BIT[cls]
    return mask


def classes_of(mask: int) -> frozenset[GenderClass]:
    return frozenset(c for c, bit in _CLASS_BIT.items() if mask & bit)


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    classes: frozenset[GenderClass]
    language: str
    number: Optional[str] = None

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.surface.split(" "))


@dataclass
class Lexicon:
    language: str
    entries: list[LexiconEntry] = field(default_factory=list)

    @property
    def max_ngram(self) -> int:
        return max((len(e.tokens) for e in self.entries), default=0)

    def __len__(self) -> int:
        return len(self.entries)


class LexiconFormatError(ValueError):
    """A lexicon line that cannot be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_lexicon(
    source: Union[bytes, str, Iterable[str]],
    language: str,
    config: NormalizationConfig = DEFAULT_CONFIG,
) -> Lexicon:
    """Parse TSV lexicon content; duplicate surfaces union their classes."""
    if isinstance(source, bytes):
        lines = source.decode("utf-8").splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    elif hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        lines = data.splitlines()
    else:
        lines = [line.rstrip("\r\n") for line in source]

    merged: dict[str, list] = {}
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        columns = line.rstrip("\r\n").split("\t")
        if len(columns) not in (2, 3):
            raise LexiconFormatError(line_no, f"expected 2 or 3 columns, got {len(columns)}")
        surface = normalize_term(columns[0], config)
        if not surface:
            raise LexiconFormatError(line_no, "empty term")
        mask = 0
        for name in columns[1].split(";"):
            cls = _NAME_TO_CLASS.get(name.strip().lower())
            if cls is None:
                raise LexiconFormatError(line_no, f"unknown gender class {name.strip()!r}")
            mask |= _CLASS_BIT[cls]
        number = None
        if len(columns) == 3 and columns[2].strip():
            number = columns[2].strip().lower()
            if number not in _NUMBER_TAGS:
                raise LexiconFormatError(line_no, f"unknown number tag {columns[2].strip()!r}")
        slot = merged.get(surface)
        if slot is None:
            merged[surface] = [mask, number]
        else:
            slot[0] |= mask
            if slot[1] != number:
                slot[1] = None

    entries = [
        LexiconEntry(surface, classes_of(mask), language, number)
        for surface, (mask, number) in merged.items()
    ]
    if not entries:
        log.warning("lexicon for %s is empty", language)
    return Lexicon(language, entries)


def render_lexicon(lexicon: Lexicon) -> str:
    """TSV serialization; parse_lexicon(render_lexicon(lex)) round-trips."""
    order = [GenderClass.FEMININE, GenderClass.MASCULINE, GenderClass.UNSPECIFIED]
    lines = []
    for entry in lexicon.entries:
        classes = ";".join(c.value for c in order if c in entry.classes)
        row = f"{entry.surface}\t{classes}"
        if entry.number:
            row += f"\t{entry.number}"
        lines.append(row)
    return "\n".join(lines) + ("\n" if lines else "")


def lexicon_path(lexicon_dir, language: str) -> Path:
    return Path(lexicon_dir) / f"{language}.tsv"


def load_lexicon(
    lexicon_dir,
    language: str,
    config: NormalizationConfig = DEFAULT_CONFIG,
) -> Lexicon:
    path = lexicon_path(lexicon_dir, language)
    with open(path, "rb") as fh:
        return parse_lexicon(fh.read(), language, config)


# --- validation -------------------------------------------------------------

@dataclass
class ValidationReport:
    language: str
    entry_count: int
    per_class: dict[str, int]
    per_token_length: dict[int, int]
    per_class_number: dict[str, dict[str, int]]
    suspicious: list[tuple[str, str]]
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "language": self.language,
            "entry_count": self.entry_count,
            "per_class": self.per_class,
            "per_token_length": {str(k): v for k, v in self.per_token_length.items()},
            "per_class_number": self.per_class_number,
            "suspicious": [{"surface": s, "reason": r} for s, r in self.suspicious],
            "notes": self.notes,
        }
        return json.dumps(payload, ensure_ascii=False, indent=2)

    def to_text(self) -> str:
        lines = [f"lexicon {self.language}: {self.entry_count} entries"]
        for name, count in self.per_class.items():
            numbers = self.per_class_number.get(name, {})
            detail = ", ".join(f"{k}={v}" for k, v in sorted(numbers.items()))
            lines.append(f"  {name}: {count}" + (f" ({detail})" if detail else ""))
        lengths = ", ".join(f"{n}-token={c}" for n, c in sorted(self.per_token_length.items()))
        lines.append(f"  token lengths: {lengths or 'none'}")
        for surface, reason in self.suspicious:
            lines.append(f"  suspicious: {surface!r} ({reason})")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def validate_lexicon(lexicon: Lexicon) -> ValidationReport:
    """Class/number/length breakdown plus entries worth human review."""
    strategy = detect_strategy(lexicon.language)
    per_class = {c.value: 0 for c in GenderClass}
    per_length: dict[int, int] = {}
    per_class_number: dict[str, dict[str, int]] = {}
    suspicious = []
    for entry in lexicon.entries:
        length = len(entry.tokens)
        per_length[length] = per_length.get(length, 0) + 1
        for cls in entry.classes:
            per_class[cls.value] += 1
            bucket = per_class_number.setdefault(cls.value, {})
            tag = entry.number or "untagged"
            bucket[tag] = bucket.get(tag, 0) + 1
        if any(ch.isdigit() for ch in entry.surface):
            suspicious.append((entry.surface, "contains digits"))
        if not any(ch.isalnum() for ch in entry.surface):
            suspicious.append((entry.surface, "no letter or digit; can never match"))
        elif strategy.kind is StrategyKind.DELIMITED and len(entry.surface) <= 2:
            suspicious.append((entry.surface, "short surface; high homograph risk"))
    return ValidationReport(
        language=lexicon.language,
        entry_count=len(lexicon.entries),
        per_class=per_class,
        per_token_length=per_length,
        per_class_number=per_class_number,
        suspicious=suspicious,
    )


def flag_entry_count_outliers(
    reports: list[ValidationReport], factor: float = 3.0
) -> list[ValidationReport]:
    """Annotate reports whose entry count is far above the mean across
    languages (heavily inflected languages routinely stand out)."""
    if len(reports) >= 2:
        mean = sum(r.entry_count for r in reports) / len(reports)
        if mean > 0:
            for report in reports:
                if report.entry_count > factor * mean:
                    report.notes.append(
                        f"entry count {report.entry_count} is "
                        f"{report.entry_count / mean:.1f}x the mean ({mean:.0f})"
                    )
    return reports


# --- match index ------------------------------------------------------------

class MatchIndex:
    """Immutable lookup structures for one language's lexicon.

    Delimited strategy: token n-gram tables keyed by tuples of normalized
    tokens (entries are tokenized by the same word-boundary rules as corpus
    text, so hyphenated and multi-word terms match end to end). Unsegmented
    strategy: a substring automaton over the entry surfaces.
    """

    def __init__(
        self,
        lexicon: Lexicon,
        strategy: SegmentationStrategy,
        config: NormalizationConfig = DEFAULT_CONFIG,
    ):
        self.language = lexicon.language
        self.strategy = strategy
        self.config = config
        self.unigrams: dict[str, int] = {}
        self.ngrams: dict[tuple[str, ...], int] = {}
        self.max_ngram = 0
        self.patterns: dict[str, int] = {}
        self.matcher: Optional[SubstringMatcher] = None

        if strategy.kind is StrategyKind.DELIMITED:
            for entry in lexicon.entries:
                tokens = tuple(
                    entry.surface[a:b] for a, b in kernels.word_spans(entry.surface)
                )
                if not tokens:
                    continue
                if len(tokens) == 1:
                    key = tokens[0]
                    self.unigrams[key] = self.unigrams.get(key, 0) | mask_of(entry.classes)
                else:
                    self.ngrams[tokens] = self.ngrams.get(tokens, 0) | mask_of(entry.classes)
                if len(tokens) > self.max_ngram:
                    self.max_ngram = len(tokens)
        else:
            for entry in lexicon.entries:
                if entry.surface:
                    self.patterns[entry.surface] = (
                        self.patterns.get(entry.surface, 0) | mask_of(entry.classes)
                    )
            self.matcher = SubstringMatcher(self.patterns)

    def __len__(self) -> int:
        return len(self.unigrams) + len(self.ngrams) + len(self.patterns)

    def lookup(self, term: str) -> Optional[frozenset[GenderClass]]:
        """Class set for an exact term, None when absent."""
        surface = normalize_term(term, self.config)
        if self.strategy.kind is StrategyKind.UNSEGMENTED:
            mask = self.patterns.get(surface)
        else:
            tokens = tuple(surface[a:b] for a, b in kernels.word_spans(surface))
            if len(tokens) == 1:
                mask = self.unigrams.get(tokens[0])
            else:
                mask = self.ngrams.get(tokens)
        return classes_of(mask) if mask else None


def build_match_index(
    lexicon: Lexicon,
    strategy: Optional[SegmentationStrategy] = None,
    config: NormalizationConfig = DEFAULT_CONFIG,
) -> MatchIndex:
    """Build the immutable lookup index; strategy defaults to the language's."""
    if strategy is None:
        strategy = detect_strategy(lexicon.language)
    return MatchIndex(lexicon, strategy, config)
