"""Corpus streaming: line-per-sentence text and document-level JSONL.

Gzip is detected from the magic bytes, so callers never declare compression.
Dirty input does not abort an audit: undecodable bytes are replaced and
tallied, malformed JSONL records are skipped and tallied, and both tallies
surface in the report metadata.
"""

from __future__ import annotations

import enum
import gzip
import io
import json
import logging
import sys
from dataclasses import dataclass
from itertools import islice
from pathlib import Path
from typing import Iterator, Optional, Union

log = logging.getLogger(__name__)

_GZIP_MAGIC = b"\x1f\x8b"


class CorpusFormat(enum.Enum):
    PLAIN_LINES = "txt"
    JSONL = "jsonl"


class SampleLevel(enum.Enum):
    SENTENCE = "sentence"
    DOCUMENT = "document"


@dataclass(frozen=True)
class CorpusSpec:
    """Where and how to read one corpus; ``path`` may be ``-`` for stdin."""

    path: Union[str, Path]
    format: CorpusFormat = CorpusFormat.PLAIN_LINES
    jsonl_field: str = "text"
    level: SampleLevel = SampleLevel.SENTENCE
    limit: Optional[int] = None


@dataclass(frozen=True)
class Sample:
    text: str
    ordinal: int


def _open_stream(spec: CorpusSpec) -> io.BufferedReader:
    if str(spec.path) == "-":
        raw = sys.stdin.buffer
        buffered = raw if isinstance(raw, io.BufferedReader) else io.BufferedReader(raw)
    else:
        buffered = open(spec.path, "rb")
    head = buffered.peek(2)[:2]
    if head == _GZIP_MAGIC:
        return gzip.open(buffered, "rb")
    return buffered


class CorpusReader:
    """Lazy sample iterator with decode/skip tallies and a byte counter."""

    def __init__(self, spec: CorpusSpec):
        self.spec = spec
        self.decode_errors = 0
        self.skipped_records = 0
        self.bytes_read = 0
        self._emitted = 0
        self._line_no = 0
        self._stream = _open_stream(spec)

    def __iter__(self) -> Iterator[Sample]:
        return self

    def __next__(self) -> Sample:
        spec = self.spec
        while True:
            if spec.limit is not None and self._emitted >= spec.limit:
                self.close()
                raise StopIteration
            raw = self._stream.readline()
            if not raw:
                self.close()
                raise StopIteration
            self._line_no += 1
            self.bytes_read += len(raw)
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError:
                line = raw.decode("utf-8", "replace")
                self.decode_errors += 1
            text = self._parse(line)
            if text is None:
                continue
            sample = Sample(text, self._emitted)
            self._emitted += 1
            return sample

    def _parse(self, line: str) -> Optional[str]:
        if self.spec.format is CorpusFormat.PLAIN_LINES:
            return line.rstrip("\r\n")
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            self.skipped_records += 1
            log.warning("%s line %d: malformed JSON record skipped (%s)",
                        self.spec.path, self._line_no, exc.msg)
            return None
        text = record.get(self.spec.jsonl_field) if isinstance(record, dict) else None
        if not isinstance(text, str):
            self.skipped_records += 1
            log.warning("%s line %d: record lacks string field %r; skipped",
                        self.spec.path, self._line_no, self.spec.jsonl_field)
            return None
        return text

    def close(self) -> None:
        if self._stream is not None and self._stream is not sys.stdin.buffer:
            self._stream.close()


def open_corpus(spec: CorpusSpec) -> CorpusReader:
    """Open a corpus for streaming; raises OSError for unreadable paths."""
    return CorpusReader(spec)


def next_batch(reader: CorpusReader, batch_size: int) -> list[Sample]:
    """Up to ``batch_size`` samples in order; empty list signals exhaustion."""
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    return list(islice(reader, batch_size))
