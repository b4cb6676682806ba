"""Structured-text (JSON) documents for traces, audits and search results.

Key order is fixed and output is produced with ``sort_keys=False`` and a
fixed indent, so identical inputs serialize to identical bytes.  Move
indices are 0-based.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .audit import AuditReport
from .notation import SolutionTrace, format_script
from .oracle import SearchResult

FORMAT_VERSION = 1


def _moves(trace: SolutionTrace) -> list[dict[str, Any]]:
    return [
        {
            "index": k,
            "token": label,
            "from": m.from_index,
            "to": m.to_index,
            "weight_delta": m.weight_delta,
        }
        for k, (m, label) in enumerate(zip(trace.moves, trace.labels))
    ]


def trace_document(trace: SolutionTrace, audit: Optional[AuditReport] = None) -> dict[str, Any]:
    script = trace.script
    counts = trace.counts
    doc: dict[str, Any] = {
        "format": FORMAT_VERSION,
        "n": trace.n,
        "script": None if script is None else format_script(script),
        "moves": _moves(trace),
        "weight_trace": list(trace.weight_trace),
        "counts": {"total": counts["total"], "steps": counts["steps"], "jumps": counts["jumps"]},
        "final_board": trace.final_board.cells,
        "solved": trace.solved,
    }
    if audit is not None:
        doc["audit"] = audit_document(audit)
    return doc


def audit_document(report: AuditReport) -> dict[str, Any]:
    g = report.grouping
    n = report.n
    return {
        "n": n,
        "verdict": "pass" if report.passed else "fail",
        "move_count": report.move_count,
        "solved": report.solved,
        "final_weight": report.final_weight,
        "first_crosses": report.first_cross_count,
        "pair_crossings": report.pair_crossings,
        "parity_ok": report.parity_ok,
        "alternation": {
            "passed": report.alternation.passed,
            "violations": {
                str(peg): idx for peg, idx in report.alternation.per_peg.items() if idx is not None
            },
            "mechanism": [[str(p), k, msg] for p, k, msg in report.alternation.mechanism],
        },
        "group_counts": report.group_counts(),
        "groups": [
            {"kind": grp.kind.value, "members": list(grp.members), "gain": grp.gain, "rule": grp.rule}
            for grp in g.groups
        ],
        "conflicts": [list(c) for c in g.conflicts],
        "missing_partners": list(g.missing),
        "merged_blocks": [list(b) for b in g.blocks],
        "lower_bound": {
            "first_cross_weight": report.first_cross_weight,
            "other_moves": report.other_moves,
            "other_gain": report.other_gain,
            "implied_minimum": report.implied_minimum,
            "closed_form_length": n * n + 2 * n,
        },
        "checks": dict(report.checks),
    }


def search_document(result: SearchResult) -> dict[str, Any]:
    from .notation import classify

    return {
        "format": FORMAT_VERSION,
        "n": result.n,
        "min_moves": result.min_moves,
        "expected": result.n * result.n + 2 * result.n,
        "reachable_states": result.reachable_states,
        "peak_frontier": result.peak_frontier,
        "states_expanded": result.states_expanded,
        "path": None
        if result.path is None
        else [
            {"index": k, "token": classify(m), "from": m.from_index, "to": m.to_index}
            for k, m in enumerate(result.path)
        ],
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
