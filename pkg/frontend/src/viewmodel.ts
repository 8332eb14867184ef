// Board state machine.  Pure except for calls through the injected
// ApiClient; the DOM layer only reads the view model and forwards
// clicks, so this is where the game rules on the client side live.

import type { ApiClient } from "./api.js";
import { isLegalTarget, legalTargets, passAllowed } from "./moves.js";
import type { GameState, MoveJson, Square, Status } from "./types.js";

export interface BoardViewModel {
  queen: Square;
  passAvailable: boolean;
  legalTargets: Square[];
  passEnabled: boolean;
  overlayOn: boolean;
  overlayPoints: Square[];
  status: Status;
  lastEngineMove: MoveJson | null;
}

export class GameController {
  vm: BoardViewModel;
  private sessionId: string | null = null;
  onChange: (vm: BoardViewModel) => void = () => {};

  constructor(private api: ApiClient) {
    this.vm = {
      queen: { x: 0, y: 0 },
      passAvailable: false,
      legalTargets: [],
      passEnabled: false,
      overlayOn: false,
      overlayPoints: [],
      status: "human_turn",
      lastEngineMove: null,
    };
  }

  private state(): GameState {
    return {
      x: this.vm.queen.x,
      y: this.vm.queen.y,
      pass: this.vm.passAvailable,
    };
  }

  private setState(s: GameState): void {
    this.vm.queen = { x: s.x, y: s.y };
    this.vm.passAvailable = s.pass;
    this.vm.legalTargets = legalTargets(s);
    this.vm.passEnabled = passAllowed(s);
  }

  private emit(): void {
    this.onChange(this.vm);
  }

  async newGame(
    x: number,
    y: number,
    enginePlays: "first" | "second",
  ): Promise<void> {
    const res = await this.api.createSession(x, y, enginePlays);
    this.sessionId = res.session_id;
    this.vm.lastEngineMove = res.engine_move;
    this.setState(res.state);
    this.vm.status = res.winner === "engine" ? "engine_won" : "human_turn";
    if (this.vm.overlayOn) await this.refreshOverlay();
    this.emit();
  }

  /** P/N preview for the new-game form; no session involved. */
  async preview(x: number, y: number): Promise<boolean> {
    const res = await this.api.evalPosition(x, y, true);
    return res.is_p;
  }

  /**
   * Handle a board click.  Off-line squares are rejected locally and
   * never produce a request.
   */
  async clickSquare(target: Square): Promise<boolean> {
    if (this.vm.status !== "human_turn" || this.sessionId === null) return false;
    const kind = this.moveKind(target);
    if (kind === null) return false;
    return this.submit(kind, target);
  }

  async clickPass(): Promise<boolean> {
    if (this.vm.status !== "human_turn" || this.sessionId === null) return false;
    if (!this.vm.passEnabled) return false;
    return this.submit("pass");
  }

  private moveKind(target: Square): string | null {
    if (!isLegalTarget(this.state(), target)) return null;
    const dx = this.vm.queen.x - target.x;
    const dy = this.vm.queen.y - target.y;
    if (dy === 0) return "leftward";
    if (dx === 0) return "upward";
    return "diagonal";
  }

  private async submit(kind: string, target?: Square): Promise<boolean> {
    this.vm.status = "engine_thinking";
    this.emit();
    const res = await this.api.move(this.sessionId!, kind, target);
    this.vm.lastEngineMove = res.engine_move;
    this.setState(res.state);
    if (res.winner === "human") {
      this.vm.status = "human_won";
    } else if (res.winner === "engine") {
      this.vm.status = "engine_won";
    } else {
      this.vm.status = "human_turn";
    }
    // the overlay layer must track the pass flag: once the pass is
    // spent the relevant P-set is the classical one
    if (this.vm.overlayOn) await this.refreshOverlay();
    this.emit();
    return true;
  }

  async toggleOverlay(boardSize: number): Promise<void> {
    this.vm.overlayOn = !this.vm.overlayOn;
    if (this.vm.overlayOn) {
      await this.refreshOverlay(boardSize);
    } else {
      this.vm.overlayPoints = [];
    }
    this.emit();
  }

  private overlaySize = 25;

  private async refreshOverlay(boardSize?: number): Promise<void> {
    if (boardSize) this.overlaySize = boardSize;
    const layer = this.vm.passAvailable ? "pass" : "classic";
    const pts = await this.api.pPositions(this.overlaySize, layer);
    this.vm.overlayPoints = pts.map((p) => ({ x: p.x, y: p.y }));
  }
}
