"""Command-line interface: tables, verification, queries, plots, playouts."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import characterization, engine, plotting, strategy, verifier

DEFAULT_WINDOW = 200


def _write(out: str | None, text: str) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    table = engine.build_grundy_table(args.window)
    if args.format == "csv":
        _write(args.out, engine.table_to_csv(table))
    else:
        _write(args.out, engine.table_to_json(table))
    return 0


def cmd_verify(args) -> int:
    table = engine.build_grundy_table(args.window)
    report = verifier.verify_all(args.window, table)
    if args.json:
        _write(args.out, report.to_json() + "\n")
    else:
        _write(args.out, report.to_text() + "\n")
    return 0 if report.overall else 1


def cmd_eval(args) -> int:
    table = engine.build_grundy_table(args.window)
    pos = engine.Position(args.x, args.y)
    state = engine.PassState(pos, args.pass_available)
    g_classic = table.grundy(pos)
    g_pass = table.grundy_pass(state)
    choice = strategy.best_move(state, table)
    variant = "pass available" if args.pass_available else "pass spent"
    print(f"position ({args.x},{args.y}), {variant}")
    print(f"G_classical={g_classic}, G_pass={g_pass}")
    if choice.position_class == "P":
        print("P-position, no winning move")
    else:
        mv = choice.best
        tgt = mv.end
        print(
            f"N-position, winning move: {mv.kind.value} to "
            f"({tgt.pos.x},{tgt.pos.y})"
            + ("" if tgt.pass_available == args.pass_available else " [pass spent]")
        )
    return 0


def cmd_plot(args) -> int:
    table = engine.build_grundy_table(args.window)
    svg = plotting.plot_p_positions(
        args.window, args.which, table, with_overlay=args.overlay
    )
    _write(args.out, svg)
    return 0


def cmd_play(args) -> int:
    table = engine.build_grundy_table(args.window)
    start = engine.PassState(engine.Position(args.x, args.y), args.pass_available)
    record = strategy.playout(start, args.policy, args.seed, table)
    sys.stdout.write(record.to_jsonl())
    print(json.dumps({"winner": record.winner}))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    ui_dir = args.ui if args.ui and Path(args.ui).is_dir() else None
    app = create_app(window=args.window, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wythoff",
        description="Perfect-play engine and verifier for Wythoff's game "
        "and its pass variant.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_window(p):
        p.add_argument("--window", "-n", type=int, default=DEFAULT_WINDOW)

    p = sub.add_parser("table", help="build and export a Grundy table")
    add_window(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run all verification claims")
    add_window(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="classify a single position")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--pass-available", action="store_true", dest="pass_available")
    add_window(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("plot", help="SVG scatter of P-positions")
    add_window(p)
    p.add_argument("which", choices=["classic", "pass"])
    p.add_argument("--out", default=None)
    p.add_argument("--overlay", action="store_true",
                   help="overlay the classic-layer points under the pass layer")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("play", help="run one playout and print the record")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--pass-available", action="store_true", dest="pass_available")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policy", choices=["random", "optimal"], default="random")
    add_window(p)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="start the HTTP service")
    add_window(p)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", default=None,
                   help="directory with the built web UI to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
