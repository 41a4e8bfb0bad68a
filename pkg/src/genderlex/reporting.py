"""Rendering of aggregated reports and explain-mode annotations.

TSV and Markdown round the way the published tables do (scores to three
decimals, the standard error to four, coverage to one) and Markdown bolds
the most represented class; JSON carries full precision and round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .ingestion import Sample
from .matching import MatchAnnotation, SampleCounts
from .statistics import GenderCounts, GenderReport, Skew

TSV_COLUMNS = ("lang", "fem", "masc", "uns", "delta", "ste", "skew", "words", "coverage")


@dataclass
class RowMeta:
    counts: GenderCounts = field(default_factory=GenderCounts)
    decode_errors: int = 0
    skipped_records: int = 0
    runtime_s: float = 0.0
    error: Optional[str] = None


@dataclass
class ReportRow:
    language: str
    report: GenderReport
    meta: RowMeta


@dataclass
class ReportDocument:
    dataset: str
    rows: list[ReportRow]

    def sorted_rows(self) -> list[ReportRow]:
        return sorted(self.rows, key=lambda r: r.language)


def _row_values(row: ReportRow) -> tuple[str, ...]:
    r = row.report
    return (
        row.language,
        f"{r.score_fem:.3f}",
        f"{r.score_masc:.3f}",
        f"{r.score_uns:.3f}",
        f"{r.delta:.3f}",
        f"{r.ste:.4f}",
        r.skew.value,
        str(r.words),
        f"{r.coverage:.1f}",
    )


def _render_tsv(doc: ReportDocument) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    lines.extend("\t".join(_row_values(row)) for row in doc.sorted_rows())
    return "\n".join(lines) + "\n"


def _render_markdown(doc: ReportDocument) -> str:
    lines = [
        f"### {doc.dataset}",
        "",
        "| " + " | ".join(TSV_COLUMNS) + " |",
        "|" + "---|" * len(TSV_COLUMNS),
    ]
    for row in doc.sorted_rows():
        values = list(_row_values(row))
        scores = (row.report.score_fem, row.report.score_masc, row.report.score_uns)
        top = max(range(3), key=lambda i: scores[i])
        values[1 + top] = f"**{values[1 + top]}**"
        lines.append("| " + " | ".join(values) + " |")
    return "\n".join(lines) + "\n"


def _report_to_dict(report: GenderReport) -> dict:
    return {
        "score_fem": report.score_fem,
        "score_masc": report.score_masc,
        "score_uns": report.score_uns,
        "delta": report.delta,
        "ste": report.ste,
        "skew": report.skew.value,
        "coverage": report.coverage,
        "words": report.words,
        "samples": report.samples,
    }


def _counts_to_dict(counts: GenderCounts) -> dict:
    return {
        "fem": counts.fem,
        "masc": counts.masc,
        "uns": counts.uns,
        "words": counts.words,
        "samples": counts.samples,
        "samples_matched": counts.samples_matched,
    }


def _render_json(doc: ReportDocument) -> str:
    payload = {
        "dataset": doc.dataset,
        "rows": [
            {
                "language": row.language,
                "report": _report_to_dict(row.report),
                "meta": {
                    "counts": _counts_to_dict(row.meta.counts),
                    "decode_errors": row.meta.decode_errors,
                    "skipped_records": row.meta.skipped_records,
                    "runtime_s": row.meta.runtime_s,
                    "error": row.meta.error,
                },
            }
            for row in doc.sorted_rows()
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def render_report(doc: ReportDocument, format: str = "tsv") -> str:
    """Serialize a report document as ``tsv``, ``json``, or ``md``."""
    if format == "tsv":
        return _render_tsv(doc)
    if format == "json":
        return _render_json(doc)
    if format == "md":
        return _render_markdown(doc)
    raise ValueError(f"unknown report format: {format!r}")


def parse_report_json(text: str) -> ReportDocument:
    """Inverse of the JSON rendering: parse(render(doc)) == doc."""
    payload = json.loads(text)
    rows = []
    for item in payload["rows"]:
        rep = item["report"]
        meta = item["meta"]
        rows.append(
            ReportRow(
                language=item["language"],
                report=GenderReport(
                    score_fem=rep["score_fem"],
                    score_masc=rep["score_masc"],
                    score_uns=rep["score_uns"],
                    delta=rep["delta"],
                    ste=rep["ste"],
                    skew=Skew(rep["skew"]),
                    coverage=rep["coverage"],
                    words=rep["words"],
                    samples=rep["samples"],
                ),
                meta=RowMeta(
                    counts=GenderCounts(**meta["counts"]),
                    decode_errors=meta["decode_errors"],
                    skipped_records=meta["skipped_records"],
                    runtime_s=meta["runtime_s"],
                    error=meta["error"],
                ),
            )
        )
    return ReportDocument(dataset=payload["dataset"], rows=rows)


def _mark_hits(text: str, annotations: list[MatchAnnotation]) -> str:
    marked = text
    for ann in sorted(annotations, key=lambda a: a.start, reverse=True):
        marked = marked[:ann.start] + "**" + marked[ann.start:ann.end] + "**" + marked[ann.end:]
    return marked


def render_annotations(
    records: Iterable[tuple[Sample, SampleCounts, list[MatchAnnotation]]],
    format: str = "text",
    include_unmatched: bool = False,
) -> Iterable[str]:
    """Render explain-mode output, one line per sample.

    Text format marks hits inline and appends the class tally; JSONL emits
    the sample with its annotations and counts. Unmatched samples are
    omitted unless requested.
    """
    for sample, counts, annotations in records:
        if not annotations and not include_unmatched:
            continue
        if format == "text":
            marked = _mark_hits(sample.text, annotations)
            yield f"{marked}  fem+={counts.fem}, masc+={counts.masc}, uns+={counts.uns}"
        elif format == "jsonl":
            yield json.dumps(
                {
                    "ordinal": sample.ordinal,
                    "text": sample.text,
                    "annotations": [
                        {
                            "term": a.term,
                            "classes": sorted(c.value for c in a.classes),
                            "start": a.start,
                            "end": a.end,
                        }
                        for a in annotations
                    ],
                    "counts": {
                        "fem": counts.fem,
                        "masc": counts.masc,
                        "uns": counts.uns,
                        "words": counts.words,
                        "matched": counts.matched,
                    },
                },
                ensure_ascii=False,
            )
        else:
            raise ValueError(f"unknown annotation format: {format!r}")
