"""Verification records and their CSV / JSON serialisations."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

__all__ = ["CSV_COLUMNS", "Record", "VerificationReport", "format_csv", "parse_csv", "format_json"]

CSV_COLUMNS = ("k_re", "k_im", "w_re", "w_im", "method", "value_re", "value_im",
               "err_est", "gap", "pass")


def _fmt(x: float) -> str:
    return "%.17g" % x


@dataclass(frozen=True)
class Record:
    """One evaluated quantity and its check against the other routes."""

    k: complex
    w: complex
    method: str
    value: complex
    err_est: float
    gap: float
    passed: bool

    def row(self) -> list[str]:
        return [_fmt(self.k.real), _fmt(self.k.imag), _fmt(self.w.real), _fmt(self.w.imag),
                self.method, _fmt(self.value.real), _fmt(self.value.imag),
                _fmt(self.err_est), _fmt(self.gap), "true" if self.passed else "false"]

    def as_dict(self) -> dict:
        vals = dict(zip(CSV_COLUMNS, (self.k.real, self.k.imag, self.w.real, self.w.imag,
                                      self.method, self.value.real, self.value.imag,
                                      self.err_est, self.gap, self.passed)))
        # JSON has no NaN / Inf literals
        return {key: (None if isinstance(v, float) and not math.isfinite(v) else v)
                for key, v in vals.items()}


@dataclass
class VerificationReport:
    records: list = field(default_factory=list)
    skipped: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def summary(self) -> dict:
        gaps = [r.gap for r in self.records if math.isfinite(r.gap)]
        n_pass = sum(r.passed for r in self.records)
        out = {
            "max_gap": max(gaps) if gaps else 0.0,
            "records": len(self.records),
            "passed": n_pass,
            "failed": len(self.records) - n_pass,
            "skipped": self.skipped,
        }
        out.update(self.extra)
        return out


def format_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def parse_csv(text: str) -> list[Record]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_COLUMNS:
        raise ValueError("unexpected CSV header")
    out = []
    for row in reader:
        kr, ki, wr, wi, method, vr, vi, err, gap, ok = row
        out.append(Record(complex(float(kr), float(ki)), complex(float(wr), float(wi)), method,
                          complex(float(vr), float(vi)), float(err), float(gap), ok == "true"))
    return out


def format_json(report: VerificationReport) -> str:
    body = {"records": [r.as_dict() for r in report.records], "summary": report.summary()}
    return json.dumps(body, indent=2, sort_keys=False) + "\n"
