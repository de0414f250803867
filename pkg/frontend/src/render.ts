// DOM rendering of one game view. Pure: wipes the container and redraws
// from the controller's public fields; no game values are computed here
// except the displayed unimodal labels.

import { Pair } from "./api.js";
import {
  Annotation,
  GameView,
  RemovalStep,
  UiGameState,
  boxKey,
  boxInDiagram,
  isEmptyPosition,
} from "./state.js";

export function unimodalLabel(
  m: number,
  n: number,
  i: number,
  j: number,
): number {
  return Math.min(j - i + m, i - j + n);
}

export function formatParts(parts: number[]): string {
  if (isEmptyPosition(parts)) return "∅";
  return `(${parts.join(",")})`;
}

export function formatAnnotation(note: Annotation): string {
  return `→ ${formatParts(note.to)}, \u{1D4A2}=${note.grundy} (${note.outcome})`;
}

export function formatStep(step: RemovalStep): string {
  const phase = step.kind === "first" ? "removing hook" : "forced second hook";
  return `${phase} at (${step.box[0]},${step.box[1]}), window (${step.lr[0]},${step.lr[1]})`;
}

export function stateIsRenderable(state: UiGameState): boolean {
  const { m, n } = state.board;
  if (!Number.isInteger(m) || !Number.isInteger(n) || m < 1 || n < m) {
    return false;
  }
  if (state.current.length !== m) return false;
  return state.current.every(
    (p, row) =>
      Number.isInteger(p) &&
      p >= 0 &&
      p <= n &&
      (row === 0 || p <= (state.current[row - 1] ?? 0)),
  );
}

function el(
  tag: string,
  className: string,
  text = "",
): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

export interface ViewHandlers {
  onBoxClick?: (box: Pair) => void;
}

// Renders the whole game area. Renders nothing but the message line when
// there is no state or the state is malformed.
export function renderGame(
  container: HTMLElement,
  view: GameView,
  handlers: ViewHandlers = {},
): void {
  container.textContent = "";
  if (view.message) {
    container.appendChild(el("p", "message", view.message));
  }
  const state = view.state;
  if (!state || !stateIsRenderable(state)) return;

  const { m, n } = state.board;
  const status = el("p", "status");
  if (view.winner) {
    status.classList.add("banner");
    status.textContent =
      view.winner === "human"
        ? "Game over: you made the last move and win."
        : "Game over: the engine made the last move and wins.";
  } else if (view.busy) {
    status.textContent = "thinking…";
  } else {
    status.textContent =
      state.turn === "human" ? "Your turn: click a box." : "Engine to move.";
  }
  container.appendChild(status);

  const clickable = !view.busy && !view.winner && state.turn === "human";
  const grid = el("div", "grid");
  grid.style.gridTemplateColumns = `repeat(${n}, var(--cell))`;
  for (let i = 1; i <= m; i++) {
    for (let j = 1; j <= n; j++) {
      const inside = boxInDiagram(state.current, [i, j]);
      const cell = el("div", inside ? "cell box" : "cell outside");
      cell.dataset.i = String(i);
      cell.dataset.j = String(j);
      if (inside) {
        cell.appendChild(
          el("span", "label", String(unimodalLabel(m, n, i, j))),
        );
        const note = view.annotations.get(boxKey([i, j]));
        if (note) cell.appendChild(el("span", "hint", formatAnnotation(note)));
        if (clickable) {
          cell.classList.add("clickable");
          cell.addEventListener("click", () =>
            handlers.onBoxClick?.([i, j]),
          );
        }
      }
      grid.appendChild(cell);
    }
  }
  container.appendChild(grid);

  if (isEmptyPosition(state.current)) {
    container.appendChild(
      el("p", "empty-note", "The diagram is empty; no moves remain."),
    );
  }

  const history = el("ol", "history");
  for (const record of state.history) {
    const entry = `${formatParts(record.from)} −(${record.box[0]},${record.box[1]})→ ${formatParts(record.to)} [${record.op}]`;
    history.appendChild(el("li", "", entry));
  }
  container.appendChild(history);
}
