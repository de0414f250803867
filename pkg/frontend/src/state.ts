// Game state and orchestration. The server decides legality, results,
// and Grundy values; this module sequences requests and keeps history.

import {
  Api,
  ApiError,
  MoveRecord,
  OptionRecord,
  Pair,
  PositionRecord,
} from "./api.js";

export type Turn = "human" | "engine";
export type Strategy = "perfect" | "random";
export type Winner = "human" | "engine" | null;

export interface UiGameState {
  board: { m: number; n: number };
  current: number[];
  history: MoveRecord[];
  turn: Turn;
  overlayEnabled: boolean;
}

export interface Annotation {
  to: number[];
  grundy: number;
  outcome: "P" | "N";
}

export interface RemovalStep {
  kind: "first" | "second";
  box: Pair;
  lr: Pair;
}

export function fullRectangle(m: number, n: number): number[] {
  return Array.from({ length: m }, () => n);
}

export function isEmptyPosition(parts: number[]): boolean {
  return parts.every((p) => p === 0);
}

export function sameParts(a: number[], b: number[]): boolean {
  return a.length === b.length && a.every((p, row) => p === b[row]);
}

export function boxInDiagram(parts: number[], box: Pair): boolean {
  const [i, j] = box;
  if (!Number.isInteger(i) || !Number.isInteger(j)) return false;
  if (i < 1 || i > parts.length || j < 1) return false;
  return j <= (parts[i - 1] ?? 0);
}

export function lexCompare(a: number[], b: number[]): number {
  for (let k = 0; k < Math.min(a.length, b.length); k++) {
    const d = (a[k] ?? 0) - (b[k] ?? 0);
    if (d !== 0) return d;
  }
  return a.length - b.length;
}

export function applyRecord(state: UiGameState, record: MoveRecord): UiGameState {
  if (!sameParts(record.from, state.current)) {
    throw new Error(
      `record starts at (${record.from}) but the position is (${state.current})`,
    );
  }
  return {
    ...state,
    current: record.to.slice(),
    history: [...state.history, record],
    turn: state.turn === "human" ? "engine" : "human",
  };
}

// Replays the history from the full rectangle; throws if the records
// do not chain. Used to validate imported state.
export function replayHistory(
  board: { m: number; n: number },
  history: MoveRecord[],
): number[] {
  let current = fullRectangle(board.m, board.n);
  for (const record of history) {
    if (!sameParts(record.from, current)) {
      throw new Error(`broken chain at (${record.from})`);
    }
    current = record.to.slice();
  }
  return current;
}

export function chooseReply(
  options: OptionRecord[],
  strategy: Strategy,
  rng: () => number = Math.random,
): OptionRecord {
  if (options.length === 0) throw new Error("no options to choose from");
  if (strategy === "random") {
    return options[Math.floor(rng() * options.length)]!;
  }
  const sorted = options.slice().sort((a, b) => lexCompare(a.to, b.to));
  const winning = sorted.find((option) => option.grundy === 0);
  return winning ?? sorted[0]!;
}

export function serializeState(state: UiGameState): string {
  return JSON.stringify(state);
}

export function deserializeState(text: string): UiGameState {
  const raw = JSON.parse(text);
  const board = raw?.board;
  if (
    !board ||
    !Number.isInteger(board.m) ||
    !Number.isInteger(board.n) ||
    !Array.isArray(raw.current) ||
    !Array.isArray(raw.history) ||
    (raw.turn !== "human" && raw.turn !== "engine")
  ) {
    throw new Error("not a saved game state");
  }
  const state: UiGameState = {
    board: { m: board.m, n: board.n },
    current: raw.current.map(Number),
    history: raw.history as MoveRecord[],
    turn: raw.turn,
    overlayEnabled: Boolean(raw.overlayEnabled),
  };
  const replayed = replayHistory(state.board, state.history);
  if (!sameParts(replayed, state.current)) {
    throw new Error("history does not replay to the saved position");
  }
  return state;
}

function sleep(ms: number): Promise<void> {
  if (ms <= 0) return Promise.resolve();
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export interface ControllerHooks {
  onChange?: () => void;
  onStep?: (step: RemovalStep) => void;
  delayMs?: number;
  rng?: () => number;
}

// What the renderer needs to draw one frame; GameController satisfies it.
export interface GameView {
  state: UiGameState | null;
  busy: boolean;
  message: string;
  winner: Winner;
  annotations: ReadonlyMap<string, Annotation>;
}

// Sequences one game: human moves by box click, engine replies from the
// served options. At most one request chain is in flight at a time.
export class GameController {
  api: Api;
  state: UiGameState | null = null;
  busy = false;
  message = "";
  winner: Winner = null;
  strategy: Strategy = "perfect";
  annotations = new Map<string, Annotation>();

  private onChange: () => void;
  private onStep: (step: RemovalStep) => void;
  private delayMs: number;
  private rng: () => number;

  constructor(api: Api, hooks: ControllerHooks = {}) {
    this.api = api;
    this.onChange = hooks.onChange ?? (() => {});
    this.onStep = hooks.onStep ?? (() => {});
    this.delayMs = hooks.delayMs ?? 0;
    this.rng = hooks.rng ?? Math.random;
  }

  private changed(): void {
    this.onChange();
  }

  async newGame(m: number, n: number): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.message = "";
    this.winner = null;
    this.annotations.clear();
    this.changed();
    try {
      const summary = await this.api.board(m, n);
      const start = await this.verifyMember(summary.start, summary.m, summary.n);
      this.state = {
        board: { m: summary.m, n: summary.n },
        current: start.lambda.slice(),
        history: [],
        turn: "human",
        overlayEnabled: this.state?.overlayEnabled ?? false,
      };
      await this.refreshAnnotations(start);
    } catch (error) {
      this.state = null;
      this.message = describeError(error);
    } finally {
      this.busy = false;
      this.changed();
    }
  }

  // Loads a serialized state; the position is re-verified server-side.
  async loadState(text: string): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.message = "";
    this.changed();
    try {
      const state = deserializeState(text);
      const record = await this.verifyMember(
        state.current,
        state.board.m,
        state.board.n,
      );
      this.state = state;
      this.winner = isEmptyPosition(state.current)
        ? state.turn === "engine"
          ? "human"
          : "engine"
        : null;
      this.annotations.clear();
      if (!this.winner && state.turn === "engine") {
        await this.engineReply(record);
      } else {
        await this.refreshAnnotations(record);
      }
    } catch (error) {
      this.message = describeError(error);
    } finally {
      this.busy = false;
      this.changed();
    }
  }

  setStrategy(strategy: Strategy): void {
    this.strategy = strategy;
    this.changed();
  }

  async toggleOverlay(): Promise<void> {
    if (!this.state) return;
    this.state = { ...this.state, overlayEnabled: !this.state.overlayEnabled };
    await this.refreshAnnotations();
    this.changed();
  }

  // Human move: ignores clicks outside the diagram or out of turn, posts
  // the move, animates the removals, then plays the engine reply.
  async submitMove(box: Pair): Promise<void> {
    const state = this.state;
    if (!state || this.busy || this.winner || state.turn !== "human") return;
    if (!boxInDiagram(state.current, box)) return;
    this.busy = true;
    this.message = "";
    this.changed();
    try {
      const { m, n } = state.board;
      const record = await this.api.move(m, n, state.current, box);
      await this.animate(record);
      this.state = applyRecord(state, record);
      this.changed();
      const landed = await this.verifyMember(this.state.current);
      if (isEmptyPosition(this.state.current)) {
        this.winner = "human";
        this.annotations.clear();
        return;
      }
      await this.engineReply(landed);
    } catch (error) {
      // the server holds no game state, so a failed chain rolls back to
      // the pre-click position (unless the member guard cleared it)
      if (this.state !== null) this.state = state;
      this.message = describeError(error);
    } finally {
      this.busy = false;
      this.changed();
    }
  }

  private async engineReply(landed: PositionRecord): Promise<void> {
    const state = this.state;
    if (!state) return;
    const options = landed.options ?? [];
    const choice = chooseReply(options, this.strategy, this.rng);
    const via = choice.via_boxes[0];
    if (!via) throw new Error("served option has no via box");
    const { m, n } = state.board;
    const record = await this.api.move(m, n, state.current, via.box);
    await this.animate(record);
    this.state = applyRecord(state, record);
    this.changed();
    const after = await this.verifyMember(this.state.current);
    if (isEmptyPosition(this.state.current)) {
      this.winner = "engine";
      this.annotations.clear();
      return;
    }
    await this.refreshAnnotations(after);
  }

  private async animate(record: MoveRecord): Promise<void> {
    this.onStep({ kind: "first", box: record.box, lr: record.first_lr });
    await sleep(this.delayMs);
    if (record.op === "MHR2" && record.second_box && record.second_lr) {
      this.onStep({
        kind: "second",
        box: record.second_box,
        lr: record.second_lr,
      });
      await sleep(this.delayMs);
    }
  }

  // Fetches the position and enforces the invariant that the UI only
  // ever displays members.
  private async verifyMember(
    parts: number[],
    m?: number,
    n?: number,
  ): Promise<PositionRecord> {
    const board = this.state?.board;
    const record = await this.api.position(
      m ?? board!.m,
      n ?? board!.n,
      parts,
    );
    if (!record.member) {
      this.state = null;
      throw new Error(`position (${parts}) is not a game position`);
    }
    return record;
  }

  // Annotations come straight from the served option records; a fetch
  // failure degrades to an unannotated board.
  private async refreshAnnotations(record?: PositionRecord): Promise<void> {
    this.annotations.clear();
    const state = this.state;
    if (!state || !state.overlayEnabled || this.winner) return;
    if (state.turn !== "human") return;
    try {
      const { m, n } = state.board;
      const position =
        record ?? (await this.api.position(m, n, state.current));
      for (const option of position.options ?? []) {
        const outcome = option.grundy === 0 ? "P" : "N";
        for (const via of option.via_boxes) {
          this.annotations.set(boxKey(via.box), {
            to: option.to,
            grundy: option.grundy,
            outcome,
          });
        }
      }
    } catch {
      this.annotations.clear();
    }
  }
}

export function boxKey(box: Pair): string {
  return `${box[0]},${box[1]}`;
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) return error.message;
  if (error instanceof Error) return error.message;
  return String(error);
}
