"""Command line: export embeddings from a checkpoint, validate files."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .export import ExportError, ExportSpec, Family, export
from .embfile import EmbfileError
from .validate import ValidationError, validate


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alm-exporter",
        description="Extract sentence embeddings for the canonical 108 "
                    "instructions from pretrained checkpoints")
    sub = parser.add_subparsers(dest="command", required=True)

    exp = sub.add_parser("export", help="run one extraction")
    exp.add_argument("--checkpoint", required=True,
                     help="model id or local checkpoint directory")
    exp.add_argument("--family", required=True,
                     choices=[f.value for f in Family])
    exp.add_argument("--out", required=True, help="output embjson path")
    exp.add_argument("--sentences", help="canonical sentence list override")
    exp.add_argument("--batch-size", type=int, default=32)
    exp.add_argument("--device", default="cpu")

    val = sub.add_parser("validate", help="check an embjson file")
    val.add_argument("path")
    val.add_argument("--sentences", help="canonical sentence list override")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "export":
            summary = export(ExportSpec(
                checkpoint=args.checkpoint, family=Family(args.family),
                out_path=args.out, sentences_path=args.sentences,
                batch_size=args.batch_size, device=args.device))
            print(f"export: {summary['model']} ({summary['family']}) -> "
                  f"{summary['out']} ({summary['count']}x{summary['dim']})")
        else:
            summary = validate(args.path, sentences_path=args.sentences)
            print(f"validate: OK model={summary['model']} "
                  f"dim={summary['dim']} count={summary['count']}")
    except (ExportError, ValidationError, EmbfileError, ValueError) as exc:
        print(f"{args.command} failed: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
