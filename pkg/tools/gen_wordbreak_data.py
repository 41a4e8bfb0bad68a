#!/usr/bin/env python3
"""Regenerate src/genderlex/_wbdata.py from the Python unicodedata tables.

Derives a per-codepoint classification used by the segmentation kernels:
word-break class (UAX #29 style), grapheme-break class, and an
"alphanumeric" flag. The big classes (letters, digits, marks) come from
general categories; the small classes (MidLetter, MidNum, ...) are explicit
code point sets; script-shaped classes (Katakana, Hebrew letters, the
dictionary-segmented SE-Asian scripts, ideographs) use block ranges.

Run from the repository root:

    python tools/gen_wordbreak_data.py > src/genderlex/_wbdata.py
"""

import sys
import unicodedata

MAX_CP = 0x110000

# word-break classes; keep in sync with genderlex._uniprops
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

ALNUM_BIT = 1 << 9

NEWLINES = {0x0B, 0x0C, 0x85, 0x2028, 0x2029}

MIDLETTER = {0x3A, 0xB7, 0x387, 0x55F, 0x5F4, 0x2027, 0xFE13, 0xFE55, 0xFF1A}
MIDNUM = {0x2C, 0x3B, 0x37E, 0x60C, 0x60D, 0x66C, 0x7F8, 0x2044,
          0xFE10, 0xFE14, 0xFE50, 0xFE54, 0xFF0C, 0xFF1B}
MIDNUMLET = {0x2E, 0x2019, 0x2024, 0xFE52, 0xFF07, 0xFF0E}
# letter-like modifier symbols listed as ALetter in the UCD
ALETTER_EXTRAS = (
    set(range(0x2C2, 0x2C6)) | set(range(0x2D2, 0x2D8)) | {0x2DE, 0x2DF}
    | set(range(0x2E5, 0x2EC)) | {0x2ED} | set(range(0x2EF, 0x300))
    | {0x5F3} | set(range(0xA708, 0xA717)) | {0xA720, 0xA721, 0xA789, 0xA78A, 0xAB5B}
)
# marks that are not Mn/Mc/Me but still extend the preceding character
EXTEND_EXTRAS = {0x200C, 0xFF9E, 0xFF9F} | set(range(0x1F3FB, 0x1F400))
NO_BREAK_SPACES = {0xA0, 0x2007, 0x202F}

KATAKANA_RANGES = [
    (0x3031, 0x3036), (0x309B, 0x309D), (0x30A0, 0x30FB), (0x30FC, 0x3100),
    (0x31F0, 0x3200), (0x32D0, 0x32FF), (0x3300, 0x3358), (0xFF66, 0xFF9E),
    (0x1B000, 0x1B001), (0x1B164, 0x1B168),
]
HEBREW_RANGES = [(0x5D0, 0x5F3), (0xFB1D, 0xFB1E), (0xFB1F, 0xFB50)]
# ideographic and dictionary-segmented scripts: excluded from ALetter so a
# run of them falls out of word matching (handled by the substring matcher)
ALETTER_EXCLUDED_RANGES = [
    (0x0E00, 0x0F00),    # Thai, Lao
    (0x1000, 0x10A0),    # Myanmar
    (0x1780, 0x1800),    # Khmer
    (0x1950, 0x19E0),    # Tai Le, New Tai Lue
    (0x19E0, 0x1A00),    # Khmer symbols
    (0x1A20, 0x1AB0),    # Tai Tham
    (0x3005, 0x3008),    # ideographic iteration marks
    (0x3041, 0x30A0),    # Hiragana
    (0x3400, 0x4DC0), (0x4E00, 0xA000),   # CJK unified
    (0xA9E0, 0xAA00), (0xAA60, 0xAA80),   # Myanmar extensions
    (0xAA80, 0xAAE0),    # Tai Viet
    (0xF900, 0xFB00),    # CJK compatibility
    (0x1B170, 0x1B300),  # Nushu
    (0x20000, 0x2A6E0), (0x2A700, 0x2EBF0), (0x2F800, 0x2FA20),
    (0x30000, 0x31350),
]


def _in_ranges(cp, ranges):
    return any(lo <= cp < hi for lo, hi in ranges)


def wb_class(cp, cat):
    if cp == 0x0D:
        return WB_CR
    if cp == 0x0A:
        return WB_LF
    if cp in NEWLINES:
        return WB_NEWLINE
    if cp == 0x200D:
        return WB_ZWJ
    if 0x1F1E6 <= cp <= 0x1F1FF:
        return WB_RI
    if cp == 0x27:
        return WB_SINGLE_QUOTE
    if cp == 0x22:
        return WB_DOUBLE_QUOTE
    if cp in MIDLETTER:
        return WB_MIDLETTER
    if cp in MIDNUM:
        return WB_MIDNUM
    if cp in MIDNUMLET:
        return WB_MIDNUMLET
    if cat == "Pc" or cp == 0x202F:
        return WB_EXTENDNUMLET
    if cat in ("Mn", "Mc", "Me") or cp in EXTEND_EXTRAS:
        return WB_EXTEND
    if cat == "Cf" and cp != 0x200B:
        return WB_FORMAT
    if _in_ranges(cp, KATAKANA_RANGES):
        return WB_KATAKANA
    if cat == "Lo" and _in_ranges(cp, HEBREW_RANGES):
        return WB_HEBREW_LETTER
    if cat == "Nd" or cp == 0x66B:
        return WB_NUMERIC
    if cat == "Zs" and cp not in NO_BREAK_SPACES:
        return WB_WSEGSPACE
    if cat in ("Lu", "Ll", "Lt", "Lm", "Lo", "Nl") or cp in ALETTER_EXTRAS:
        if _in_ranges(cp, ALETTER_EXCLUDED_RANGES):
            return WB_OTHER
        return WB_ALETTER
    return WB_OTHER


def gb_class(cp, cat):
    if cp == 0x0D:
        return GB_CR
    if cp == 0x0A:
        return GB_LF
    if cp == 0x200D:
        return GB_ZWJ
    if 0x1F1E6 <= cp <= 0x1F1FF:
        return GB_RI
    if cat in ("Mn", "Me") or cp in EXTEND_EXTRAS:
        return GB_EXTEND
    if cat == "Mc":
        return GB_SPACINGMARK
    if cat == "Cc" or cat == "Cf" or cat in ("Zl", "Zp"):
        return GB_CONTROL
    if 0x1100 <= cp <= 0x115F or 0xA960 <= cp <= 0xA97C:
        return GB_HANGUL_L
    if 0x1160 <= cp <= 0x11A7 or 0xD7B0 <= cp <= 0xD7C6:
        return GB_HANGUL_V
    if 0x11A8 <= cp <= 0x11FF or 0xD7CB <= cp <= 0xD7FB:
        return GB_HANGUL_T
    return GB_OTHER


def main():
    values = []
    for cp in range(MAX_CP):
        cat = unicodedata.category(chr(cp))
        v = wb_class(cp, cat) | (gb_class(cp, cat) << 5)
        if cat[0] in "LN":
            v |= ALNUM_BIT
        values.append(v)

    starts, packed = [], []
    prev = None
    for cp, v in enumerate(values):
        if v != prev:
            starts.append(cp)
            packed.append(v)
            prev = v

    out = sys.stdout
    out.write('"""Generated by tools/gen_wordbreak_data.py; do not edit.\n\n')
    out.write("Per-codepoint segmentation properties as half-open ranges:\n")
    out.write("VALUES[i] applies to code points in [STARTS[i], STARTS[i+1]).\n")
    out.write('"""\n\n')
    out.write(f'UNICODE_VERSION = "{unicodedata.unidata_version}"\n\n')
    out.write(f"# {len(starts)} ranges\n")
    for name, seq in (("STARTS", starts), ("VALUES", packed)):
        out.write(f"{name} = (\n")
        for i in range(0, len(seq), 12):
            out.write("    " + ", ".join(str(x) for x in seq[i:i + 12]) + ",\n")
        out.write(")\n\n")


if __name__ == "__main__":
    main()
