"""Reader/writer for the embjson/1 interchange format.

This mirrors the primary toolkit's on-disk contract: a JSON document
with format tag, model name, dims, the sentence list, and vectors whose
floats are printed at 17 significant digits (exact float64 round-trip).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Sequence

import numpy as np

FORMAT_TAG = "embjson/1"


class EmbfileError(RuntimeError):
    pass


def write_embjson(path, model_name: str, sentences: Sequence[str],
                  matrix: np.ndarray) -> None:
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != len(sentences):
        raise EmbfileError(
            f"matrix shape {matrix.shape} does not match "
            f"{len(sentences)} sentences")
    if not np.isfinite(matrix).all():
        bad = int(np.argwhere(~np.isfinite(matrix).all(axis=1))[0, 0])
        raise EmbfileError(f"non-finite values in row {bad}")
    rows = ["[" + ", ".join(f"{x:.17g}" for x in row) + "]" for row in matrix]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("{\n")
        fh.write(f'"format": {json.dumps(FORMAT_TAG)},\n')
        fh.write(f'"model": {json.dumps(model_name)},\n')
        fh.write(f'"dim": {matrix.shape[1]},\n')
        fh.write(f'"count": {matrix.shape[0]},\n')
        fh.write(f'"sentences": {json.dumps(list(sentences))},\n')
        fh.write('"vectors": [\n' + ",\n".join(rows) + "\n]\n")
        fh.write("}\n")


def read_embjson(path):
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise EmbfileError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_TAG:
        raise EmbfileError(f"{path}: missing or wrong format tag")
    for key in ("model", "dim", "count", "sentences", "vectors"):
        if key not in doc:
            raise EmbfileError(f"{path}: missing field {key!r}")
    return doc
