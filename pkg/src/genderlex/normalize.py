"""Term and token normalization shared by the lexicon and the tokenizer."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

_WS = re.compile(r"\s+")


@dataclass(frozen=True)
class NormalizationConfig:
    """Controls how lexicon terms and corpus tokens are canonicalized.

    Case folding uses the default (locale-independent) Unicode algorithm on
    both sides of a match; disabling it makes matching case-sensitive.
    """

    case_fold: bool = True


DEFAULT_CONFIG = NormalizationConfig()


def normalize_term(raw: str, config: NormalizationConfig = DEFAULT_CONFIG) -> str:
    """Canonical form of a term: NFC, case-folded, whitespace-collapsed.

    Idempotent, and identical for canonically equivalent inputs (NFC vs NFD).
    The result may be empty; callers that require non-empty terms reject it.
    """
    text = unicodedata.normalize("NFC", raw)
    if config.case_fold:
        # folding can denormalize; recompose so the result is stable
        text = unicodedata.normalize("NFC", text.casefold())
    return _WS.sub(" ", text).strip()
