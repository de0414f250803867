"""Wire formats: JSON records, canonical graph documents, DOT, and CSV.

Wire conventions, fixed across CLI and HTTP: part arrays are always length
m with zeros kept; boxes and windows are 1-based pairs; move endpoints use
"from"/"to" keys.  The graph document is canonical JSON (sorted keys,
compact separators, content-determined list order), so serializing a parsed
document reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
import json

from .analysis import GrundyTable
from .diagram import Board, Parts, dual, index_set, make_board, partition
from .engine import OP_DOUBLE, OP_SINGLE, GameGraph, MoveRecord


def parse_parts_text(board: Board, text: str) -> Parts:
    """Parse a comma-separated lambda like "3,1" into a validated partition.

    The token count must equal the board's row count; zeros are never
    trimmed, so the empty diagram on a 2-row board is "0,0".
    """
    tokens = [t.strip() for t in text.split(",")]
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"lambda {text!r} has non-integer parts") from exc
    if len(values) != board.m:
        raise ValueError(
            f"lambda {text!r} has {len(values)} parts, board needs exactly {board.m}")
    return partition(board, values)


def move_record_to_dict(rec: MoveRecord) -> dict:
    """MoveRecord as a JSON-ready dict with wire key names."""
    out: dict = {
        "from": list(rec.source),
        "box": list(rec.box),
        "first_lr": list(rec.first_lr),
        "op": rec.op,
    }
    if rec.op == OP_DOUBLE:
        out["second_box"] = list(rec.second_box)
        out["second_lr"] = list(rec.second_lr)
    out["to"] = list(rec.target)
    return out


def _via_box_entry(rec: MoveRecord) -> dict:
    entry = {"box": list(rec.box), "first_lr": list(rec.first_lr)}
    if rec.op == OP_DOUBLE:
        entry["second_box"] = list(rec.second_box)
        entry["second_lr"] = list(rec.second_lr)
    return entry


def position_record(board: Board, parts: Parts, graph: GameGraph,
                    table: GrundyTable) -> dict:
    """The public description of one position.

    grundy and outcome are present exactly when the position is a member
    (reachable in play); non-members still report their index set and dual.
    """
    record = {
        "m": board.m,
        "n": board.n,
        "lambda": list(parts),
        "index_set": list(index_set(board, parts)),
        "dual": list(dual(board, parts)),
        "member": parts in graph.nodes,
    }
    if record["member"]:
        record["grundy"] = table[parts]
        record["outcome"] = "P" if table[parts] == 0 else "N"
    return record


def option_records(graph: GameGraph, table: GrundyTable, parts: Parts) -> list[dict]:
    """One record per distinct option, sorted by resulting position.

    via_boxes lists every box reaching that option in row-major order; the
    record-level op tag is the first via box's, and each via box carries its
    own second removal when it is an MHR2 move.
    """
    groups: dict[Parts, list[MoveRecord]] = {}
    for rec in graph.records(parts):
        groups.setdefault(rec.target, []).append(rec)
    out = []
    for target in sorted(groups):
        recs = groups[target]
        out.append({
            "to": list(target),
            "op": recs[0].op,
            "grundy": table[target],
            "via_boxes": [_via_box_entry(rec) for rec in recs],
        })
    return out


def graph_to_json(graph: GameGraph, table: GrundyTable) -> str:
    """Canonical JSON document for a whole game graph."""
    ordered = sorted(graph.nodes)
    doc = {
        "m": graph.board.m,
        "n": graph.board.n,
        "start": list(graph.start),
        "nodes": [{"lambda": list(p), "grundy": table[p]} for p in ordered],
        "edges": [
            {"from": list(p), "options": option_records(graph, table, p)}
            for p in ordered
            if graph.records(p)
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def graph_from_json(text: str) -> tuple[GameGraph, GrundyTable]:
    """Rebuild a graph and its Grundy table from the canonical document."""
    doc = json.loads(text)
    board = make_board(doc["m"], doc["n"])
    start = tuple(doc["start"])
    values = {tuple(node["lambda"]): node["grundy"] for node in doc["nodes"]}
    edges: dict[Parts, tuple[MoveRecord, ...]] = {p: () for p in values}
    for edge in doc["edges"]:
        source = tuple(edge["from"])
        records = []
        for option in edge["options"]:
            target = tuple(option["to"])
            for entry in option["via_boxes"]:
                double = "second_box" in entry
                records.append(MoveRecord(
                    source=source,
                    box=tuple(entry["box"]),
                    first_lr=tuple(entry["first_lr"]),
                    op=OP_DOUBLE if double else OP_SINGLE,
                    second_box=tuple(entry["second_box"]) if double else None,
                    second_lr=tuple(entry["second_lr"]) if double else None,
                    target=target,
                ))
        records.sort(key=lambda rec: rec.box)
        edges[source] = tuple(records)
    graph = GameGraph(board, start, frozenset(values), edges)
    return graph, GrundyTable(board, values)


def _node_key(parts: Parts) -> str:
    return ",".join(str(p) for p in parts)


def graph_to_dot(graph: GameGraph, table: GrundyTable) -> str:
    """DOT export: one arrow per distinct (from, to) pair, labeled with its ops."""
    lines = [f"digraph mhrg_{graph.board.m}x{graph.board.n} {{",
             "  rankdir=TB;",
             '  node [shape=box];']
    ordered = sorted(graph.nodes)
    for parts in ordered:
        disp = "(" + ",".join(str(p) for p in parts) + ")"
        lines.append(f'  "{_node_key(parts)}" [label="{disp}\\ng={table[parts]}"];')
    for parts in ordered:
        ops_by_target: dict[Parts, set[str]] = {}
        for rec in graph.records(parts):
            ops_by_target.setdefault(rec.target, set()).add(rec.op)
        for target in sorted(ops_by_target):
            label = ", ".join(sorted(ops_by_target[target]))
            lines.append(
                f'  "{_node_key(parts)}" -> "{_node_key(target)}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


POSITION_CSV_COLUMNS = ["m", "n", "lambda", "index_set", "dual",
                        "member", "grundy", "outcome"]


def _join_ints(values) -> str:
    return " ".join(str(v) for v in values)


def positions_to_csv(records: list[dict]) -> str:
    """PositionRecords as CSV; integer arrays are space-joined inside a cell."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(POSITION_CSV_COLUMNS)
    for record in records:
        writer.writerow([
            record["m"],
            record["n"],
            _join_ints(record["lambda"]),
            _join_ints(record["index_set"]),
            _join_ints(record["dual"]),
            str(record["member"]).lower(),
            record.get("grundy", ""),
            record.get("outcome", ""),
        ])
    return buf.getvalue()


GRAPH_CSV_COLUMNS = ["from", "box", "first_lr", "op",
                     "second_box", "second_lr", "to"]


def graph_to_csv(graph: GameGraph) -> str:
    """Every MoveRecord of the graph as one CSV row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(GRAPH_CSV_COLUMNS)
    for parts in sorted(graph.nodes):
        for rec in graph.records(parts):
            writer.writerow([
                _join_ints(rec.source),
                _join_ints(rec.box),
                _join_ints(rec.first_lr),
                rec.op,
                _join_ints(rec.second_box) if rec.second_box else "",
                _join_ints(rec.second_lr) if rec.second_lr else "",
                _join_ints(rec.target),
            ])
    return buf.getvalue()
