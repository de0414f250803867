"""Read-only HTTP/JSON service over cached per-board game graphs.

Routes live under /api/v1.  The service holds no game state: every request
is answered from the immutable graph and Grundy table of its board, built
on first touch and cached for the process lifetime.  Error mapping:
malformed request content is 400, a structurally valid but nonexistent
board or position is 404, and a board over the enumeration guardrail
is 422.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass

from fastapi import Body, FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .analysis import GrundyTable, grundy_table
from .diagram import Board, Parts, has_box, make_board, partition
from .engine import GameGraph, PositionLimitError, mhr_move, position_count, reachable_graph
from .serialize import (
    graph_to_json,
    move_record_to_dict,
    option_records,
    position_record,
)


@dataclass
class BoardData:
    board: Board
    graph: GameGraph
    table: GrundyTable


class BoardStore:
    """Lazily computed (board, graph, table) triples keyed by (m, n).

    Population is serialized by one lock; entries are immutable once stored,
    so concurrent readers need no coordination afterwards.
    """

    def __init__(self, max_positions: int | None = None):
        self.max_positions = max_positions
        self._lock = threading.Lock()
        self._cache: dict[tuple[int, int], BoardData] = {}

    def get(self, m: int, n: int) -> BoardData:
        key = (m, n)
        with self._lock:
            data = self._cache.get(key)
            if data is None:
                try:
                    board = make_board(m, n)
                except ValueError as exc:
                    raise HTTPException(404, detail=str(exc)) from exc
                try:
                    graph = reachable_graph(board, self.max_positions)
                except PositionLimitError as exc:
                    raise HTTPException(422, detail=str(exc)) from exc
                data = BoardData(board, graph, grundy_table(graph))
                self._cache[key] = data
            return data


def _parse_position(data: BoardData, lam: str) -> Parts:
    tokens = lam.split(",")
    try:
        values = [int(t.strip()) for t in tokens]
    except ValueError as exc:
        raise HTTPException(400, detail=f"malformed lambda {lam!r}: {exc}") from exc
    if len(values) != data.board.m:
        raise HTTPException(
            400, detail=f"lambda {lam!r} has {len(values)} parts, "
                        f"board ({data.board.m}, {data.board.n}) needs {data.board.m}")
    try:
        return partition(data.board, values)
    except ValueError as exc:
        raise HTTPException(404, detail=f"no such position: {exc}") from exc


def _int_pair(value, what: str) -> tuple[int, int]:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        raise HTTPException(400, detail=f"{what} must be a pair of integers")
    return (value[0], value[1])


def create_app(max_positions: int | None = None, static_dir: str | None = None) -> FastAPI:
    """Build the service; static_dir, when given, is served at the site root."""
    app = FastAPI(title="mhrg service")
    store = BoardStore(max_positions)

    @app.exception_handler(RequestValidationError)
    async def _validation_to_400(request: Request, exc: RequestValidationError):
        return JSONResponse({"detail": "malformed request: " + str(exc.errors()[:3])},
                            status_code=400)

    @app.get("/api/v1/board/{m}/{n}")
    def board_summary(m: int, n: int):
        data = store.get(m, n)
        return {
            "m": m,
            "n": n,
            "positions_total": position_count(data.board),
            "members": len(data.graph.nodes),
            "start": list(data.graph.start),
            "start_grundy": data.table[data.graph.start],
        }

    @app.get("/api/v1/board/{m}/{n}/position/{lam}")
    def board_position(m: int, n: int, lam: str):
        data = store.get(m, n)
        parts = _parse_position(data, lam)
        record = position_record(data.board, parts, data.graph, data.table)
        if record["member"]:
            record["options"] = option_records(data.graph, data.table, parts)
        return record

    @app.post("/api/v1/board/{m}/{n}/move")
    def board_move(m: int, n: int, payload: dict = Body(...)):
        data = store.get(m, n)
        if not isinstance(payload, dict) or "from" not in payload or "box" not in payload:
            raise HTTPException(400, detail='move body needs "from" and "box"')
        source = payload["from"]
        if (not isinstance(source, list)
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in source)):
            raise HTTPException(400, detail='"from" must be an integer part array')
        if len(source) != data.board.m:
            raise HTTPException(
                400, detail=f'"from" must have exactly {data.board.m} parts')
        try:
            parts = partition(data.board, source)
        except ValueError as exc:
            raise HTTPException(404, detail=f"no such position: {exc}") from exc
        i, j = _int_pair(payload["box"], '"box"')
        if not has_box(parts, i, j):
            raise HTTPException(400, detail=f"box ({i}, {j}) is not in the diagram")
        return move_record_to_dict(mhr_move(data.board, parts, (i, j)))

    @app.get("/api/v1/board/{m}/{n}/graph")
    def board_graph(m: int, n: int):
        data = store.get(m, n)
        return Response(graph_to_json(data.graph, data.table),
                        media_type="application/json")

    if static_dir is not None:
        if not os.path.isdir(static_dir):
            raise ValueError(f"static dir {static_dir!r} is not a directory")
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
