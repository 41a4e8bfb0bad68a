"""Segmentation property constants and the code point lookup.

The packed value for a code point is ``wb | (gb << 5) | (alnum << 9)`` where
``wb`` is its word-break class, ``gb`` its grapheme-break class, and ``alnum``
marks letters and numbers. Tables live in the generated module ``_wbdata``;
keep the constants here in sync with ``tools/gen_wordbreak_data.py``.
"""

from bisect import bisect_right

from ._wbdata import STARTS, VALUES, UNICODE_VERSION

__all__ = ["UNICODE_VERSION", "lookup", "STARTS", "VALUES"]

# word-break classes
WB_OTHER = 0
WB_CR = 1
WB_LF = 2
WB_NEWLINE = 3
WB_EXTEND = 4
WB_ZWJ = 5
WB_RI = 6
WB_FORMAT = 7
WB_KATAKANA = 8
WB_HEBREW_LETTER = 9
WB_ALETTER = 10
WB_SINGLE_QUOTE = 11
WB_DOUBLE_QUOTE = 12
WB_MIDLETTER = 13
WB_MIDNUM = 14
WB_MIDNUMLET = 15
WB_NUMERIC = 16
WB_EXTENDNUMLET = 17
WB_WSEGSPACE = 18

# grapheme-break classes
GB_OTHER = 0
GB_CR = 1
GB_LF = 2
GB_CONTROL = 3
GB_EXTEND = 4
GB_ZWJ = 5
GB_RI = 6
GB_SPACINGMARK = 7
GB_HANGUL_L = 8
GB_HANGUL_V = 9
GB_HANGUL_T = 10
# Hangul syllables are assigned arithmetically by lookup(), not by table
GB_HANGUL_LV = 11
GB_HANGUL_LVT = 12

WB_MASK = 31
GB_SHIFT = 5
GB_MASK = 15
ALNUM_BIT = 1 << 9

_HANGUL_SYL_BASE = 0xAC00
_HANGUL_SYL_END = 0xD7A3


def lookup(cp: int) -> int:
    """Packed segmentation properties for a code point."""
    if _HANGUL_SYL_BASE <= cp <= _HANGUL_SYL_END:
        gb = GB_HANGUL_LV if (cp - _HANGUL_SYL_BASE) % 28 == 0 else GB_HANGUL_LVT
        return WB_ALETTER | (gb << GB_SHIFT) | ALNUM_BIT
    return VALUES[bisect_right(STARTS, cp) - 1]
