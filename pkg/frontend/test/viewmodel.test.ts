import { describe, expect, it } from "vitest";

import { GameController } from "../src/viewmodel.js";
import type {
  GameState,
  MoveResponse,
  SessionResponse,
} from "../src/types.js";

// fake server: legal-move checking mirrors the real rules, engine
// always replies with a full diagonal or leftward slide
class FakeApi {
  state: GameState = { x: 0, y: 0, pass: true };
  calls: string[] = [];

  async createSession(
    x: number,
    y: number,
    _enginePlays: string,
    passAvailable = true,
  ): Promise<SessionResponse> {
    this.calls.push("createSession");
    this.state = { x, y, pass: passAvailable };
    return {
      session_id: "fake",
      state: this.state,
      engine_move: null,
      winner: null,
    };
  }

  async move(
    _id: string,
    kind: string,
    target?: { x: number; y: number },
  ): Promise<MoveResponse> {
    this.calls.push(`move:${kind}`);
    if (kind === "pass") {
      this.state = { ...this.state, pass: false };
    } else {
      this.state = { x: target!.x, y: target!.y, pass: this.state.pass };
    }
    if (this.state.x === 0 && this.state.y === 0) {
      return { state: this.state, engine_move: null, winner: "human" };
    }
    // engine reply: slide to the left edge
    const from = { ...this.state };
    this.state = { ...this.state, x: 0 };
    const engineMove = {
      kind: "leftward" as const,
      from,
      to: this.state,
    };
    const winner =
      this.state.x === 0 && this.state.y === 0 ? "engine" : null;
    return { state: this.state, engine_move: engineMove, winner };
  }

  async evalPosition(x: number, y: number, _pass: boolean) {
    this.calls.push("eval");
    return {
      grundy_classical: x === y ? 0 : 1,
      grundy_pass: 1,
      is_p: false,
      best_move: null,
    };
  }

  async pPositions(_n: number, layer: string) {
    this.calls.push(`ppositions:${layer}`);
    return layer === "pass" ? [{ x: 0, y: 0, pass: true }] : [];
  }
}

function makeController() {
  const api = new FakeApi();
  const controller = new GameController(api as any);
  return { api, controller };
}

describe("GameController", () => {
  it("populates legal targets and pass state on new game", async () => {
    const { controller } = makeController();
    await controller.newGame(2, 1, "second");
    expect(controller.vm.queen).toEqual({ x: 2, y: 1 });
    expect(controller.vm.passEnabled).toBe(true);
    expect(controller.vm.legalTargets).toHaveLength(2 + 1 + 1);
    expect(controller.vm.status).toBe("human_turn");
  });

  it("rejects off-line clicks locally, sending no request", async () => {
    const { api, controller } = makeController();
    await controller.newGame(4, 6, "second");
    const before = api.calls.length;
    const accepted = await controller.clickSquare({ x: 2, y: 3 });
    expect(accepted).toBe(false);
    expect(api.calls.length).toBe(before);
  });

  it("submits legal clicks and applies the engine reply", async () => {
    const { controller } = makeController();
    await controller.newGame(4, 6, "second");
    const accepted = await controller.clickSquare({ x: 4, y: 2 });
    expect(accepted).toBe(true);
    expect(controller.vm.queen).toEqual({ x: 0, y: 2 });
    expect(controller.vm.lastEngineMove?.kind).toBe("leftward");
    expect(controller.vm.status).toBe("human_turn");
  });

  it("detects the human win", async () => {
    const { controller } = makeController();
    await controller.newGame(1, 1, "second");
    await controller.clickSquare({ x: 0, y: 0 });
    expect(controller.vm.status).toBe("human_won");
  });

  it("pass button follows the rules", async () => {
    const { controller } = makeController();
    await controller.newGame(3, 3, "second");
    expect(controller.vm.passEnabled).toBe(true);
    await controller.clickPass();
    expect(controller.vm.passAvailable).toBe(false);
    expect(controller.vm.passEnabled).toBe(false);
    const again = await controller.clickPass();
    expect(again).toBe(false);
  });

  it("overlay layer tracks the pass flag", async () => {
    const { api, controller } = makeController();
    await controller.newGame(5, 5, "second");
    await controller.toggleOverlay(10);
    expect(api.calls.at(-1)).toBe("ppositions:pass");
    await controller.clickPass();
    expect(api.calls.at(-1)).toBe("ppositions:classic");
  });

  it("ignores clicks while the game is over", async () => {
    const { api, controller } = makeController();
    await controller.newGame(1, 1, "second");
    await controller.clickSquare({ x: 0, y: 0 });
    const before = api.calls.length;
    const accepted = await controller.clickSquare({ x: 0, y: 0 });
    expect(accepted).toBe(false);
    expect(api.calls.length).toBe(before);
  });
});
