"""Pure-Python segmentation and matching kernels.

Reference implementation of the hot loops; ``genderlex._ckernels`` is the
compiled twin with identical behavior (enforced by the parity test suite).
Word boundaries follow the UAX #29 default rules over the generated property
table, with two documented simplifications: extended-pictographic join rules
(WB3c/GB11) are not applied, and a leading run of extend/format characters
forms a single segment. Neither affects word or match counts because such
segments contain no letters or digits and are discarded.
"""

from ._uniprops import (
    ALNUM_BIT,
    GB_CONTROL,
    GB_CR,
    GB_EXTEND,
    GB_HANGUL_L,
    GB_HANGUL_LV,
    GB_HANGUL_LVT,
    GB_HANGUL_T,
    GB_HANGUL_V,
    GB_LF,
    GB_MASK,
    GB_RI,
    GB_SHIFT,
    GB_SPACINGMARK,
    GB_ZWJ,
    WB_ALETTER,
    WB_CR,
    WB_DOUBLE_QUOTE,
    WB_EXTEND,
    WB_EXTENDNUMLET,
    WB_FORMAT,
    WB_HEBREW_LETTER,
    WB_KATAKANA,
    WB_LF,
    WB_MASK,
    WB_MIDLETTER,
    WB_MIDNUM,
    WB_MIDNUMLET,
    WB_NEWLINE,
    WB_NUMERIC,
    WB_RI,
    WB_SINGLE_QUOTE,
    WB_WSEGSPACE,
    WB_ZWJ,
    lookup,
)

BACKEND = "python"

_IGNORE = (WB_EXTEND, WB_FORMAT, WB_ZWJ)
_AH = (WB_ALETTER, WB_HEBREW_LETTER)
_MID_WORD = (WB_MIDLETTER, WB_MIDNUMLET, WB_SINGLE_QUOTE)
_MID_NUM = (WB_MIDNUM, WB_MIDNUMLET, WB_SINGLE_QUOTE)
_NUMLET = (WB_ALETTER, WB_HEBREW_LETTER, WB_NUMERIC, WB_KATAKANA)


def _word_break(l_imm, r_imm, p1, p2, n1, ri_run):
    """Decide the boundary between two adjacent code points.

    ``p1``/``p2`` are the last two classes with extend/format/ZWJ skipped,
    ``n1`` the next such class after the right-hand character, ``ri_run``
    the length of the regional-indicator run ending on the left. All the
    mid-rules produce "no break", so their relative order is free.
    """
    if l_imm == WB_CR and r_imm == WB_LF:
        return False
    if l_imm in (WB_NEWLINE, WB_CR, WB_LF):
        return True
    if r_imm in (WB_NEWLINE, WB_CR, WB_LF):
        return True
    if l_imm == WB_WSEGSPACE and r_imm == WB_WSEGSPACE:
        return False
    if r_imm in _IGNORE:
        return False
    r = r_imm
    if p1 in _AH:
        if r in _AH:
            return False
        if r in _MID_WORD and n1 in _AH:
            return False
        if r == WB_NUMERIC:
            return False
    if p1 in _MID_WORD and r in _AH and p2 in _AH:
        return False
    if p1 == WB_HEBREW_LETTER:
        if r == WB_SINGLE_QUOTE:
            return False
        if r == WB_DOUBLE_QUOTE and n1 == WB_HEBREW_LETTER:
            return False
    if p1 == WB_DOUBLE_QUOTE and r == WB_HEBREW_LETTER and p2 == WB_HEBREW_LETTER:
        return False
    if p1 == WB_NUMERIC:
        if r == WB_NUMERIC:
            return False
        if r in _AH:
            return False
        if r in _MID_NUM and n1 == WB_NUMERIC:
            return False
    if p1 in _MID_NUM and r == WB_NUMERIC and p2 == WB_NUMERIC:
        return False
    if p1 == WB_KATAKANA and r == WB_KATAKANA:
        return False
    if r == WB_EXTENDNUMLET and (p1 in _NUMLET or p1 == WB_EXTENDNUMLET):
        return False
    if p1 == WB_EXTENDNUMLET and r in _NUMLET:
        return False
    if p1 == WB_RI and r == WB_RI and ri_run % 2 == 1:
        return False
    return True


def word_spans(text):
    """Half-open spans of the word segments that contain a letter or digit."""
    n = len(text)
    if n == 0:
        return []
    props = [lookup(ord(c)) for c in text]
    wb = [p & WB_MASK for p in props]

    # nxt[i]: first class after index i with extend/format/ZWJ skipped
    nxt = [-1] * n
    run = -1
    for i in range(n - 1, -1, -1):
        nxt[i] = run
        if wb[i] not in _IGNORE:
            run = wb[i]

    spans = []
    start = 0
    seen_alnum = props[0] & ALNUM_BIT
    first = wb[0]
    if first in _IGNORE:
        p1 = -1
        ri_run = 0
    else:
        p1 = first
        ri_run = 1 if first == WB_RI else 0
    p2 = -1
    for i in range(1, n):
        cls = wb[i]
        if _word_break(wb[i - 1], cls, p1, p2, nxt[i], ri_run):
            if seen_alnum:
                spans.append((start, i))
            start = i
            seen_alnum = 0
        seen_alnum |= props[i] & ALNUM_BIT
        if cls not in _IGNORE:
            p2 = p1
            p1 = cls
            ri_run = ri_run + 1 if cls == WB_RI else 0
    if seen_alnum:
        spans.append((start, n))
    return spans


def _grapheme_break(l, r, ri_run):
    if l == GB_CR and r == GB_LF:
        return False
    if l in (GB_CONTROL, GB_CR, GB_LF):
        return True
    if r in (GB_CONTROL, GB_CR, GB_LF):
        return True
    if l == GB_HANGUL_L and r in (GB_HANGUL_L, GB_HANGUL_V, GB_HANGUL_LV, GB_HANGUL_LVT):
        return False
    if l in (GB_HANGUL_LV, GB_HANGUL_V) and r in (GB_HANGUL_V, GB_HANGUL_T):
        return False
    if l in (GB_HANGUL_LVT, GB_HANGUL_T) and r == GB_HANGUL_T:
        return False
    if r in (GB_EXTEND, GB_ZWJ, GB_SPACINGMARK):
        return False
    if l == GB_RI and r == GB_RI and ri_run % 2 == 1:
        return False
    return True


def grapheme_spans(text):
    """Half-open spans of extended grapheme clusters."""
    n = len(text)
    if n == 0:
        return []
    gb = [(lookup(ord(c)) >> GB_SHIFT) & GB_MASK for c in text]
    spans = []
    start = 0
    ri_run = 1 if gb[0] == GB_RI else 0
    for i in range(1, n):
        r = gb[i]
        if _grapheme_break(gb[i - 1], r, ri_run):
            spans.append((start, i))
            start = i
        ri_run = ri_run + 1 if r == GB_RI else 0
    spans.append((start, n))
    return spans


def grapheme_count(text):
    """Number of extended grapheme clusters, without building spans."""
    n = len(text)
    if n == 0:
        return 0
    prev = (lookup(ord(text[0])) >> GB_SHIFT) & GB_MASK
    ri_run = 1 if prev == GB_RI else 0
    count = 1
    for i in range(1, n):
        r = (lookup(ord(text[i])) >> GB_SHIFT) & GB_MASK
        if _grapheme_break(prev, r, ri_run):
            count += 1
        ri_run = ri_run + 1 if r == GB_RI else 0
        prev = r
    return count


def scan_tokens(tokens, unigrams, ngrams, max_ngram):
    """Greedy leftmost-longest n-gram scan over normalized token texts.

    Returns ``(position, length, classmask)`` triples; matched windows never
    overlap and each position prefers the longest hit starting there.
    """
    out = []
    n = len(tokens)
    i = 0
    while i < n:
        hit_len = 0
        mask = 0
        top = max_ngram if max_ngram < n - i else n - i
        for length in range(top, 1, -1):
            m = ngrams.get(tuple(tokens[i:i + length]))
            if m is not None:
                hit_len = length
                mask = m
                break
        if hit_len == 0:
            m = unigrams.get(tokens[i])
            if m is not None:
                hit_len = 1
                mask = m
        if hit_len:
            out.append((i, hit_len, mask))
            i += hit_len
        else:
            i += 1
    return out
