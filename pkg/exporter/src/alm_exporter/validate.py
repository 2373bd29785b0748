"""Validation of embjson files against the canonical contract."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .canonical import canonical_sentences
from .embfile import EmbfileError, read_embjson


class ValidationError(RuntimeError):
    pass


def validate(path, sentences_path: Optional[str] = None) -> dict:
    """Schema, order, finiteness, and dim checks; returns a summary."""
    doc = read_embjson(path)
    sentences = doc["sentences"]
    vectors = doc["vectors"]
    if len(vectors) != doc["count"] or len(sentences) != doc["count"]:
        raise ValidationError(
            f"{path}: count={doc['count']} but {len(vectors)} rows and "
            f"{len(sentences)} sentences")
    try:
        matrix = np.asarray(vectors, dtype=np.float64)
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"{path}: ragged or non-numeric vectors "
                              f"({exc})") from exc
    if matrix.ndim != 2 or matrix.shape[1] != doc["dim"]:
        raise ValidationError(
            f"{path}: dim={doc['dim']} inconsistent with vector rows")
    if not np.isfinite(matrix).all():
        bad = int(np.argwhere(~np.isfinite(matrix).all(axis=1))[0, 0])
        raise ValidationError(f"{path}: non-finite values in row {bad}")
    expected = canonical_sentences(sentences_path)
    if len(sentences) != len(expected):
        raise ValidationError(
            f"{path}: expected {len(expected)} canonical sentences, "
            f"got {len(sentences)}")
    for i, (got, want) in enumerate(zip(sentences, expected)):
        if got != want:
            raise ValidationError(
                f"{path}: sentence {i} is {got!r}, canonical order "
                f"requires {want!r}")
    return {"model": doc["model"], "dim": doc["dim"], "count": doc["count"]}
