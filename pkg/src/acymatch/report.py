"""Analysis reports for a single pair and their table / JSON / CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .classify import MultiplicityClass, classify
from .errors import NoMatchingsError
from .filter import FilterTrace, run_filter
from .group import Element, format_element, format_elements, format_set, format_spec
from .harness import PairVerdict, evaluate_pair
from .matching import Matching, Mode, SubsetPair

COMPAT_WATERMARK = "bijection-compat: every bijection counted, including those with a + f(a) in A"


def _el(x: Element) -> str:
    return format_element(x) if len(x) == 1 else f"({format_element(x)})"


def format_rule(m: Matching) -> str:
    return " ".join(f"{_el(a)}->{_el(b)}" for a, b in m.rules())


def _seq(seq) -> str:
    return ",".join(str(c) for c in seq)


@dataclass(frozen=True)
class Row:
    index: int
    matching: Matching
    support: tuple[Element, ...]
    sequence: tuple[int, ...]
    acyclic: bool
    survivor: bool


@dataclass(frozen=True)
class AnalysisReport:
    pair: SubsetPair
    mode: Mode
    rows: tuple[Row, ...]
    trace: FilterTrace | None
    classes: tuple[MultiplicityClass, ...]
    verdict: PairVerdict

    @property
    def watermark(self) -> str | None:
        return COMPAT_WATERMARK if self.mode is Mode.BIJECTION else None

    def to_dict(self) -> dict:
        v = self.verdict
        return {
            "group": format_spec(self.pair.spec),
            "A": format_elements(self.pair.A),
            "B": format_elements(self.pair.B),
            "mode": self.mode.value,
            "watermark": self.watermark,
            "weak_ok": v.weak_ok,
            "violations": [[format_element(x) for x in t] for t in v.violations],
            "matching_count": len(self.rows),
            "matchings": [
                {
                    "index": r.index,
                    "rule": format_rule(r.matching),
                    "perm": list(r.matching.perm),
                    "support": [format_element(x) for x in r.support],
                    "sequence": list(r.sequence),
                    "acyclic": r.acyclic,
                    "survivor": r.survivor,
                }
                for r in self.rows
            ],
            "filter": None
            if self.trace is None
            else {
                "c_values": list(self.trace.c_values),
                "t": self.trace.t,
                "survivor_counts": list(self.trace.survivor_counts),
                "survivors": [r.index for r in self.rows if r.survivor],
            },
            "classes": {
                "count": len(self.classes),
                "singletons": sum(c.is_singleton for c in self.classes),
                "largest": max((len(c.members) for c in self.classes), default=0),
            },
            "verdict": v.to_record(),
            "acyclically_matched": bool(v.acyclic_count),
            "strongly_acyclically_matched": bool(v.matching_count) and v.acyclic_count == v.matching_count,
        }


def analyze(pair: SubsetPair, mode: Mode = Mode.STRICT, cap: int | None = None) -> AnalysisReport:
    """Full acyclicity table, filter trace, classes and verdict for one pair."""
    mode = Mode.parse(mode)
    classes = tuple(classify(pair, mode, cap))
    try:
        trace = run_filter(pair, mode)
        survivors = {m.perm for m in trace.survivors}
    except NoMatchingsError:
        trace, survivors = None, set()
    acyclic = {c.members[0].perm for c in classes if c.is_singleton}
    members = sorted(
        ((m, c.fingerprint) for c in classes for m in c.members), key=lambda t: t[0].perm
    )
    rows = tuple(
        Row(
            index=k,
            matching=m,
            support=tuple(x for x, _ in fp),
            sequence=tuple(sorted((c for _, c in fp), reverse=True)),
            acyclic=m.perm in acyclic,
            survivor=m.perm in survivors,
        )
        for k, (m, fp) in enumerate(members, start=1)
    )
    verdict = evaluate_pair(pair, mode, cap)
    return AnalysisReport(pair, mode, rows, trace, classes, verdict)


def _yn(flag) -> str:
    return "yes" if flag else "no"


def render_table(report: AnalysisReport, max_rows: int | None = None) -> str:
    pair, v = report.pair, report.verdict
    out = []
    out.append(
        f"group {format_spec(pair.spec)}  A={format_set(pair.A)}  B={format_set(pair.B)}  mode={report.mode.value}"
    )
    if report.watermark:
        out.append(f"[{report.watermark}]")
    if v.weak_ok:
        out.append("A and A+B are disjoint")
    else:
        shown = ", ".join(
            f"{_el(a)}+{_el(b)}={_el(s)}" for a, b, s in v.violations
        )
        out.append(f"A meets A+B: {shown}")
    out.append(f"matchings: {len(report.rows)}")
    out.append("")

    body = [("#", "rule", "support", "sequence", "acyclic", "survivor")]
    shown_rows = report.rows if max_rows is None else report.rows[:max_rows]
    for r in shown_rows:
        body.append(
            (
                str(r.index),
                format_rule(r.matching),
                format_set(r.support),
                _seq(r.sequence),
                _yn(r.acyclic),
                "*" if r.survivor else "",
            )
        )
    widths = [max(len(row[i]) for row in body) for i in range(len(body[0]))]
    for row in body:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    if len(shown_rows) < len(report.rows):
        out.append(f"... {len(report.rows) - len(shown_rows)} more rows")
    out.append("")

    if report.trace is None:
        out.append("filter: no matchings exist")
    else:
        tr = report.trace
        out.append(
            f"filter: C = {_seq(tr.c_values)}  t = {tr.t}  survivor counts = {_seq(tr.survivor_counts)}"
        )
        for r in report.rows:
            if r.survivor:
                out.append(
                    f"  #{r.index}  {format_rule(r.matching)}  support {format_set(r.support)}"
                    f"  sequence {_seq(r.sequence)}  {'acyclic' if r.acyclic else 'not acyclic'}"
                )
    d = report.to_dict()
    suffix = " (compat)" if report.mode is Mode.BIJECTION else ""
    out.append(
        f"classes: {d['classes']['count']} ({d['classes']['singletons']} singleton, largest {d['classes']['largest']})"
    )
    out.append(
        f"acyclic: {v.acyclic_count} of {v.matching_count}  all-ones: {v.all_ones_count}"
    )
    out.append(
        f"acyclically matched{suffix}: {_yn(d['acyclically_matched'])}  "
        f"strongly acyclically matched{suffix}: {_yn(d['strongly_acyclically_matched'])}"
    )
    return "\n".join(out) + "\n"


def render_json(report: AnalysisReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


CSV_COLUMNS = ["index", "rule", "support", "sequence", "acyclic", "survivor", "mode"]


def render_csv(report: AnalysisReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    mode = "bijection-compat" if report.mode is Mode.BIJECTION else report.mode.value
    for r in report.rows:
        writer.writerow(
            [
                r.index,
                format_rule(r.matching),
                format_elements(r.support),
                _seq(r.sequence),
                int(r.acyclic),
                int(r.survivor),
                mode,
            ]
        )
    return buf.getvalue()


def verdict_line(verdict: PairVerdict) -> str:
    return json.dumps(verdict.to_record(), separators=(",", ":"))
