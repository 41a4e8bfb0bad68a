"""genderlex: audit gender representation in multilingual text corpora.

Counts gendered person-noun matches from per-language lexicons over large
datasets and reports class scores, the feminine/masculine gap with its
standard error, a skew label, and sample coverage.
"""

from importlib import resources

from .kernels import BACKEND
from .lexicon import (
    GenderClass,
    Lexicon,
    LexiconEntry,
    LexiconFormatError,
    MatchIndex,
    build_match_index,
    load_lexicon,
    parse_lexicon,
    render_lexicon,
    validate_lexicon,
)
from .matching import MatchAnnotation, SampleCounts, annotate_sample, count_sample
from .normalize import DEFAULT_CONFIG, NormalizationConfig, normalize_term
from .segmentation import (
    SUPPORTED_LANGUAGES,
    SegmentationStrategy,
    StrategyKind,
    TokenSpan,
    WordList,
    count_words,
    detect_strategy,
    load_word_list,
    tokenize_words,
)
from .statistics import (
    GenderCounts,
    GenderReport,
    Skew,
    class_score,
    classify_skew,
    coverage,
    finalize,
    gender_gap,
    merge,
    standard_error,
)

__version__ = "0.1.0"


def bundled_lexicon_dir():
    """Directory with the lexicons shipped in the package: the English
    gendered-noun list plus small sample lexicons for demonstrations."""
    return resources.files(__name__) / "data" / "lexicons"
