"""Command line interface.

Subcommands: ``analyze`` (per-language report), ``explain`` (annotated
samples), ``validate-lexicon``, and ``bench`` (throughput measurement,
optionally comparing the compiled and pure-Python kernels).

Exit codes: 0 success or warnings, 1 fatal configuration error, 2 I/O error
under ``--strict``. Without ``--strict``, per-language failures become rows
with an error note and the run continues.
"""

from __future__ import annotations

import argparse
import enum
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__, bundled_lexicon_dir, kernels
from .ingestion import CorpusFormat, CorpusSpec, SampleLevel
from .lexicon import (
    LexiconFormatError,
    flag_entry_count_outliers,
    lexicon_path,
    load_lexicon,
    validate_lexicon,
)
from .normalize import NormalizationConfig
from .pipeline import analyze_corpus, explain_corpus
from .reporting import (
    ReportDocument,
    ReportRow,
    RowMeta,
    render_annotations,
    render_report,
)
from .segmentation import load_word_list
from .statistics import ZERO, finalize

log = logging.getLogger(__name__)


class Mode(enum.Enum):
    ANALYZE = "analyze"
    EXPLAIN = "explain"
    VALIDATE_LEXICON = "validate-lexicon"
    BENCH = "bench"


@dataclass
class RunConfig:
    mode: Mode
    languages: list[str] = field(default_factory=list)
    inputs: list[str] = field(default_factory=list)
    lexicon_dir: Optional[str] = None
    input_format: CorpusFormat = CorpusFormat.PLAIN_LINES
    jsonl_field: str = "text"
    level: SampleLevel = SampleLevel.SENTENCE
    limit: Optional[int] = None
    workers: int = 1
    case_fold: bool = True
    wordcount_dict: Optional[str] = None
    output: Optional[str] = None
    report_format: str = "tsv"
    annotations_format: str = "text"
    all_samples: bool = False
    strict: bool = False
    dataset: str = "corpus"
    bench_workers: list[int] = field(default_factory=lambda: [1])
    backend: str = "auto"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genderlex",
        description="Audit gender representation in text corpora by lexicon matching.",
    )
    parser.add_argument("--version", action="version", version=f"genderlex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_corpus=True):
        p.add_argument("--lang", action="append", required=True, metavar="CODE",
                       help="language code such as eng_Latn (repeatable)")
        p.add_argument("--lexicon-dir", default=None,
                       help="directory with <lang>.tsv lexicons (default: bundled)")
        if with_corpus:
            p.add_argument("--input", action="append", required=True, metavar="PATH",
                           help="corpus file, gzip auto-detected, '-' for stdin (repeatable)")
            p.add_argument("--format", choices=["txt", "jsonl"], default="txt",
                           help="input format (default: txt, one sample per line)")
            p.add_argument("--jsonl-field", default="text",
                           help="JSONL field holding the sample text")
            p.add_argument("--level", choices=["sentence", "document"], default="sentence",
                           help="sample unit, recorded in the report")
            p.add_argument("--limit", type=int, default=None,
                           help="cap on samples per corpus")
            p.add_argument("--no-case-fold", action="store_true",
                           help="match case-sensitively")
            p.add_argument("--wordcount-dict", default=None,
                           help="word list for unsegmented-script word counts")
            p.add_argument("--dataset", default=None, help="dataset label for the report")
            p.add_argument("--strict", action="store_true",
                           help="abort on missing lexicons or unreadable corpora")
        p.add_argument("--output", default=None, help="write output here instead of stdout")

    p = sub.add_parser("analyze", help="count matches and report per-language statistics")
    add_common(p)
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--report", choices=["tsv", "json", "md"], default="tsv")

    p = sub.add_parser("explain", help="emit per-sample annotations for matched samples")
    add_common(p)
    p.add_argument("--annotations", choices=["text", "jsonl"], default="text")
    p.add_argument("--all-samples", action="store_true",
                   help="include samples without any match")

    p = sub.add_parser("validate-lexicon", help="check lexicons and summarize their contents")
    add_common(p, with_corpus=False)
    p.add_argument("--report", choices=["text", "json"], default="text")

    p = sub.add_parser("bench", help="measure end-to-end counting throughput")
    add_common(p)
    p.add_argument("--workers", default="1",
                   help="comma-separated worker counts, e.g. 1,2,4")
    p.add_argument("--backend", choices=["auto", "python", "c", "both"], default="auto",
                   help="kernel backend to benchmark")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(mode=Mode(args.command))
    config.languages = list(args.lang)
    config.lexicon_dir = args.lexicon_dir
    config.output = args.output
    if hasattr(args, "input"):
        config.inputs = list(args.input)
        config.input_format = CorpusFormat(args.format)
        config.jsonl_field = args.jsonl_field
        config.level = SampleLevel(args.level)
        config.limit = args.limit
        config.case_fold = not args.no_case_fold
        config.wordcount_dict = args.wordcount_dict
        config.strict = args.strict
        if args.dataset:
            config.dataset = args.dataset
    if config.mode is Mode.ANALYZE:
        config.workers = args.workers
        config.report_format = args.report
    elif config.mode is Mode.EXPLAIN:
        config.annotations_format = args.annotations
        config.all_samples = args.all_samples
    elif config.mode is Mode.VALIDATE_LEXICON:
        config.report_format = args.report
    elif config.mode is Mode.BENCH:
        try:
            config.bench_workers = [int(w) for w in str(args.workers).split(",") if w]
        except ValueError:
            raise SystemExit(2)
        config.backend = args.backend
    return config


def _pairings(config: RunConfig) -> list[tuple[str, list[str]]]:
    """Map languages to their corpora: N langs with N inputs pair up,
    one language takes every input as shards of a single corpus."""
    langs, inputs = config.languages, config.inputs
    if len(langs) == 1:
        return [(langs[0], list(inputs))]
    if len(langs) == len(inputs):
        return [(lang, [path]) for lang, path in zip(langs, inputs)]
    raise ValueError(
        f"{len(langs)} languages cannot be paired with {len(inputs)} inputs; "
        "give one --lang per --input, or a single --lang for sharded input"
    )


def _corpus_spec(config: RunConfig, path: str) -> CorpusSpec:
    return CorpusSpec(
        path=path,
        format=config.input_format,
        jsonl_field=config.jsonl_field,
        level=config.level,
        limit=config.limit,
    )


def _resolve_lexicon_dir(config: RunConfig):
    return config.lexicon_dir if config.lexicon_dir is not None else bundled_lexicon_dir()


def _check_lexicons(config: RunConfig, lexicon_dir) -> Optional[list[str]]:
    """Verify every requested language has a lexicon before reading corpora.

    Returns the languages to drop (non-strict mode), or None to abort.
    """
    missing = [
        lang for lang in config.languages
        if not (Path(str(lexicon_dir)) / f"{lang}.tsv").is_file()
    ]
    for lang in missing:
        log.error("no lexicon for %s under %s", lang, lexicon_dir)
    if missing and config.strict:
        return None
    return missing


def _emit(config: RunConfig, text: str) -> None:
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_analyze(config: RunConfig) -> int:
    lexicon_dir = _resolve_lexicon_dir(config)
    missing = _check_lexicons(config, lexicon_dir)
    if missing is None:
        return 1
    norm = NormalizationConfig(case_fold=config.case_fold)
    word_list = load_word_list(config.wordcount_dict) if config.wordcount_dict else None
    rows = []
    try:
        pairings = _pairings(config)
    except ValueError as exc:
        log.error("%s", exc)
        return 1
    for lang, paths in pairings:
        meta = RowMeta()
        counts = None
        if lang in missing:
            meta.error = "missing lexicon"
        else:
            lexicon = load_lexicon(lexicon_dir, lang, norm)
            try:
                for path in paths:
                    result = analyze_corpus(
                        lexicon,
                        _corpus_spec(config, path),
                        config=norm,
                        word_list=word_list,
                        workers=config.workers,
                    )
                    counts = result.counts if counts is None else counts + result.counts
                    meta.decode_errors += result.decode_errors
                    meta.skipped_records += result.skipped_records
                    meta.runtime_s += result.runtime_s
            except OSError as exc:
                if config.strict:
                    log.error("cannot read corpus for %s: %s", lang, exc)
                    return 2
                meta.error = str(exc)
                log.warning("skipping %s: %s", lang, exc)
        if counts is None:
            counts = ZERO
        if counts.words == 0 and meta.error is None:
            log.warning("%s: corpus has no countable words; scores are zero", lang)
        meta.counts = counts
        rows.append(ReportRow(language=lang, report=finalize(counts), meta=meta))
    doc = ReportDocument(dataset=config.dataset, rows=rows)
    _emit(config, render_report(doc, config.report_format))
    return 0


def _run_explain(config: RunConfig) -> int:
    lexicon_dir = _resolve_lexicon_dir(config)
    missing = _check_lexicons(config, lexicon_dir)
    if missing is None:
        return 1
    norm = NormalizationConfig(case_fold=config.case_fold)
    word_list = load_word_list(config.wordcount_dict) if config.wordcount_dict else None
    try:
        pairings = _pairings(config)
    except ValueError as exc:
        log.error("%s", exc)
        return 1
    lines = []
    for lang, paths in pairings:
        if lang in missing:
            continue
        lexicon = load_lexicon(lexicon_dir, lang, norm)
        for path in paths:
            try:
                records = explain_corpus(
                    lexicon, _corpus_spec(config, path), config=norm, word_list=word_list
                )
                lines.extend(
                    render_annotations(
                        records, config.annotations_format, config.all_samples
                    )
                )
            except OSError as exc:
                if config.strict:
                    log.error("cannot read corpus for %s: %s", lang, exc)
                    return 2
                log.warning("skipping %s: %s", lang, exc)
    _emit(config, "".join(line + "\n" for line in lines))
    return 0


def _run_validate(config: RunConfig) -> int:
    lexicon_dir = _resolve_lexicon_dir(config)
    reports = []
    for lang in config.languages:
        path = lexicon_path(str(lexicon_dir), lang)
        if not Path(str(path)).is_file():
            log.error("no lexicon for %s under %s", lang, lexicon_dir)
            return 1
        try:
            reports.append(validate_lexicon(load_lexicon(lexicon_dir, lang)))
        except LexiconFormatError as exc:
            log.error("%s: %s", lang, exc)
            return 1
    flag_entry_count_outliers(reports)
    if config.report_format == "json":
        body = "[\n" + ",\n".join(r.to_json() for r in reports) + "\n]\n"
    else:
        body = "\n".join(r.to_text() for r in reports) + "\n"
    _emit(config, body)
    return 0


def _run_bench(config: RunConfig) -> int:
    lexicon_dir = _resolve_lexicon_dir(config)
    missing = _check_lexicons(config, lexicon_dir)
    if missing is None or missing:
        return 1
    norm = NormalizationConfig(case_fold=config.case_fold)
    word_list = load_word_list(config.wordcount_dict) if config.wordcount_dict else None
    backends = ["python", "c"] if config.backend == "both" else [config.backend]
    try:
        pairings = _pairings(config)
    except ValueError as exc:
        log.error("%s", exc)
        return 1
    lines = []
    for backend in backends:
        try:
            kernel = kernels.get_backend(backend)
        except ImportError:
            log.error("compiled kernels unavailable; build the extension or use --backend python")
            return 1
        for lang, paths in pairings:
            lexicon = load_lexicon(lexicon_dir, lang, norm)
            for workers in config.bench_workers:
                started = time.perf_counter()
                counts = None
                total_bytes = 0
                for path in paths:
                    with _forced_backend(kernel):
                        result = analyze_corpus(
                            lexicon,
                            _corpus_spec(config, path),
                            config=norm,
                            word_list=word_list,
                            workers=workers,
                        )
                    counts = result.counts if counts is None else counts + result.counts
                    total_bytes += result.bytes_read
                elapsed = time.perf_counter() - started
                lines.append(
                    f"backend={kernel.BACKEND} workers={workers} lang={lang} "
                    f"samples={counts.samples} words={counts.words} bytes={total_bytes} "
                    f"seconds={elapsed:.3f} "
                    f"words_per_sec={counts.words / elapsed:.0f} "
                    f"bytes_per_sec={total_bytes / elapsed:.0f}"
                )
    _emit(config, "".join(line + "\n" for line in lines))
    return 0


class _forced_backend:
    """Temporarily route kernel calls through a specific backend."""

    def __init__(self, module):
        self.module = module
        self.saved = {}

    def __enter__(self):
        for name in ("word_spans", "grapheme_spans", "grapheme_count", "scan_tokens"):
            self.saved[name] = getattr(kernels, name)
            setattr(kernels, name, getattr(self.module, name))
        return self

    def __exit__(self, *exc):
        for name, fn in self.saved.items():
            setattr(kernels, name, fn)
        return False


def run(config: RunConfig) -> int:
    """Execute one configured run; returns the process exit code."""
    if config.workers < 1 or any(w < 1 for w in config.bench_workers):
        log.error("workers must be >= 1")
        return 1
    if config.mode is Mode.ANALYZE:
        return _run_analyze(config)
    if config.mode is Mode.EXPLAIN:
        return _run_explain(config)
    if config.mode is Mode.VALIDATE_LEXICON:
        return _run_validate(config)
    return _run_bench(config)


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = _build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except SystemExit:
        return 1
    try:
        return run(config)
    except LexiconFormatError as exc:
        log.error("lexicon error: %s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
