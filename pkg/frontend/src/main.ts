// Bootstraps the page: one controller, one render target, plain controls.

import { ApiClient } from "./api.js";
import { GameController, Strategy, serializeState } from "./state.js";
import { formatStep, renderGame } from "./render.js";

function intParam(params: URLSearchParams, name: string, fallback: number): number {
  const raw = Number(params.get(name));
  return Number.isInteger(raw) && raw > 0 ? raw : fallback;
}

function setup(): void {
  const app = document.getElementById("app");
  const controls = document.getElementById("controls");
  const stepLine = document.getElementById("step");
  if (!app || !controls || !stepLine) return;

  const params = new URLSearchParams(window.location.search);
  const startM = intParam(params, "m", 2);
  const startN = intParam(params, "n", 3);

  const controller = new GameController(new ApiClient(""), {
    onChange: () => redraw(),
    onStep: (step) => {
      stepLine.textContent = formatStep(step);
    },
    delayMs: 450,
  });

  const mInput = document.createElement("input");
  mInput.type = "number";
  mInput.min = "1";
  mInput.value = String(startM);
  const nInput = document.createElement("input");
  nInput.type = "number";
  nInput.min = "1";
  nInput.value = String(startN);

  const newGame = document.createElement("button");
  newGame.textContent = "New game";
  newGame.addEventListener("click", () => {
    void controller.newGame(Number(mInput.value), Number(nInput.value));
  });

  const overlay = document.createElement("label");
  const overlayBox = document.createElement("input");
  overlayBox.type = "checkbox";
  overlay.append(overlayBox, " what-if overlay");
  overlayBox.addEventListener("change", () => {
    void controller.toggleOverlay();
  });

  const strength = document.createElement("select");
  for (const value of ["perfect", "random"]) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = `engine: ${value}`;
    strength.appendChild(option);
  }
  strength.addEventListener("change", () => {
    controller.setStrategy(strength.value as Strategy);
  });

  const exportBtn = document.createElement("button");
  exportBtn.textContent = "Export";
  const importBtn = document.createElement("button");
  importBtn.textContent = "Import";
  const stateBox = document.createElement("textarea");
  stateBox.rows = 3;
  exportBtn.addEventListener("click", () => {
    stateBox.value = controller.state ? serializeState(controller.state) : "";
  });
  importBtn.addEventListener("click", () => {
    void controller.loadState(stateBox.value);
  });

  controls.append(
    "m ", mInput, " n ", nInput, " ", newGame, " ", overlay, " ", strength,
    " ", exportBtn, " ", importBtn, stateBox,
  );

  const redraw = (): void => {
    if (!controller.busy) stepLine.textContent = "";
    renderGame(app, controller, {
      onBoxClick: (box) => {
        void controller.submitMove(box);
      },
    });
  };

  void controller.newGame(startM, startN);
}

setup();
