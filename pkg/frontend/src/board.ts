// DOM rendering: a grid with the origin in the upper-left corner, the
// queen sprite, highlighted legal targets, and the P-position overlay.

import type { BoardViewModel } from "./viewmodel.js";
import type { Square } from "./types.js";

export const VISIBLE_SIZE = 25;

export interface BoardCallbacks {
  onSquareClick: (sq: Square) => void;
}

export function renderBoard(
  root: HTMLElement,
  vm: BoardViewModel,
  cb: BoardCallbacks,
): void {
  root.innerHTML = "";
  root.classList.add("board");
  root.style.gridTemplateColumns = `repeat(${VISIBLE_SIZE}, 1fr)`;
  const legal = new Set(vm.legalTargets.map((s) => `${s.x},${s.y}`));
  const overlay = new Set(vm.overlayPoints.map((s) => `${s.x},${s.y}`));
  for (let y = 0; y < VISIBLE_SIZE; y++) {
    for (let x = 0; x < VISIBLE_SIZE; x++) {
      const cell = document.createElement("div");
      cell.className = "cell";
      const key = `${x},${y}`;
      if ((x + y) % 2 === 1) cell.classList.add("dark");
      if (overlay.has(key)) cell.classList.add("cold");
      if (legal.has(key) && vm.status === "human_turn") {
        cell.classList.add("legal");
      }
      if (vm.queen.x === x && vm.queen.y === y) {
        cell.classList.add("queen");
        cell.textContent = "♛";
      }
      cell.addEventListener("click", () => cb.onSquareClick({ x, y }));
      root.appendChild(cell);
    }
  }
}

export function renderStatus(el: HTMLElement, vm: BoardViewModel): void {
  const labels: Record<string, string> = {
    human_turn: "Your move",
    engine_thinking: "Engine thinking…",
    human_won: "You won!",
    engine_won: "Engine won.",
  };
  let text = labels[vm.status];
  if (vm.lastEngineMove) {
    const m = vm.lastEngineMove;
    text += `  (engine: ${m.kind} to ${m.to.x},${m.to.y})`;
  }
  el.textContent = text;
}
