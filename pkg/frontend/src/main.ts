import { ApiClient } from "./api.js";
import { renderBoard, renderStatus, VISIBLE_SIZE } from "./board.js";
import { GameController } from "./viewmodel.js";

const api = new ApiClient("");
const controller = new GameController(api);

const boardEl = document.getElementById("board")!;
const statusEl = document.getElementById("status")!;
const passBtn = document.getElementById("pass-btn") as HTMLButtonElement;
const overlayBtn = document.getElementById("overlay-btn") as HTMLButtonElement;
const newGameForm = document.getElementById("new-game") as HTMLFormElement;
const previewEl = document.getElementById("preview")!;

let busy = false;

function redraw() {
  renderBoard(boardEl, controller.vm, {
    onSquareClick: async (sq) => {
      if (busy) return;
      busy = true;
      try {
        await controller.clickSquare(sq);
      } finally {
        busy = false;
      }
    },
  });
  renderStatus(statusEl, controller.vm);
  passBtn.disabled =
    busy || controller.vm.status !== "human_turn" || !controller.vm.passEnabled;
}

controller.onChange = redraw;

passBtn.addEventListener("click", async () => {
  if (busy) return;
  busy = true;
  try {
    await controller.clickPass();
  } finally {
    busy = false;
  }
});

overlayBtn.addEventListener("click", () => {
  controller.toggleOverlay(VISIBLE_SIZE);
});

newGameForm.addEventListener("submit", async (ev) => {
  ev.preventDefault();
  const data = new FormData(newGameForm);
  const x = Number(data.get("x"));
  const y = Number(data.get("y"));
  const enginePlays = data.get("engine_plays") === "first" ? "first" : "second";
  await controller.newGame(x, y, enginePlays);
});

// what-if preview: hovering start coordinates shows the P/N class of
// that square with the pass still available
newGameForm.addEventListener("input", async () => {
  const data = new FormData(newGameForm);
  const x = Number(data.get("x"));
  const y = Number(data.get("y"));
  if (!Number.isInteger(x) || !Number.isInteger(y) || x < 0 || y < 0) return;
  try {
    const isP = await controller.preview(x, y);
    previewEl.textContent = isP
      ? `(${x},${y}) is a P-position: the engine should win`
      : `(${x},${y}) is an N-position: a winning line exists for you`;
  } catch {
    previewEl.textContent = "";
  }
});

controller.newGame(8, 5, "second").then(redraw);
