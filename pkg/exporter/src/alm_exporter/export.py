"""Embedding extraction from pretrained checkpoints, one rule per family.

decoder_only      mean of the final hidden layer's token embeddings
encoder_only_cls  final-layer vector at the [CLS] position
vl_text_encoder   the model's pooled text embedding (contrastive head)

Sentences are fed verbatim: no prompts, prefixes, or formatting, and the
checkpoint is never fine-tuned (models run in eval mode under no_grad).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np
import torch
from transformers import AutoModel, AutoTokenizer

from .canonical import canonical_sentences
from .embfile import write_embjson


class Family(str, Enum):
    DECODER_ONLY = "decoder_only"
    ENCODER_ONLY_CLS = "encoder_only_cls"
    VL_TEXT_ENCODER = "vl_text_encoder"


class ExportError(RuntimeError):
    pass


@dataclass
class ExportSpec:
    checkpoint: str
    family: Family
    out_path: str
    sentences_path: Optional[str] = None
    batch_size: int = 32
    device: str = "cpu"


def _tokenize(tokenizer, sentences: List[str], device: str):
    if tokenizer.pad_token is None and tokenizer.eos_token is not None:
        tokenizer.pad_token = tokenizer.eos_token
    enc = tokenizer(sentences, return_tensors="pt", padding=True)
    lengths = enc["attention_mask"].sum(dim=1)
    if int(lengths.min()) == 0:
        empty = int((lengths == 0).nonzero()[0, 0])
        raise ExportError(
            f"tokenizer produced an empty sequence for {sentences[empty]!r}")
    return {k: v.to(device) for k, v in enc.items()}


def _decoder_only(model, enc) -> torch.Tensor:
    out = model(input_ids=enc["input_ids"],
                attention_mask=enc["attention_mask"])
    hidden = out.last_hidden_state  # (B, T, D)
    mask = enc["attention_mask"].unsqueeze(-1).to(hidden.dtype)
    return (hidden * mask).sum(dim=1) / mask.sum(dim=1)


def _encoder_only_cls(model, enc) -> torch.Tensor:
    out = model(input_ids=enc["input_ids"],
                attention_mask=enc["attention_mask"])
    return out.last_hidden_state[:, 0]


def _vl_text_encoder(model, enc) -> torch.Tensor:
    if not hasattr(model, "get_text_features"):
        raise ExportError(
            f"{type(model).__name__} exposes no pooled text embedding; "
            f"is this really a vision-language checkpoint?")
    out = model.get_text_features(input_ids=enc["input_ids"],
                                  attention_mask=enc["attention_mask"])
    if torch.is_tensor(out):
        return out
    # newer transformers wrap the projected features in an output object
    return out.pooler_output


_RULES = {
    Family.DECODER_ONLY: _decoder_only,
    Family.ENCODER_ONLY_CLS: _encoder_only_cls,
    Family.VL_TEXT_ENCODER: _vl_text_encoder,
}


def extract_matrix(checkpoint: str, family: Family,
                   sentences: List[str], batch_size: int = 32,
                   device: str = "cpu") -> np.ndarray:
    try:
        tokenizer = AutoTokenizer.from_pretrained(checkpoint)
        model = AutoModel.from_pretrained(checkpoint)
    except Exception as exc:
        raise ExportError(f"cannot load checkpoint {checkpoint!r}: {exc}") from exc
    model.eval().to(device)
    rule = _RULES[Family(family)]
    chunks = []
    with torch.no_grad():
        for start in range(0, len(sentences), batch_size):
            enc = _tokenize(tokenizer, sentences[start:start + batch_size],
                            device)
            chunks.append(rule(model, enc).float().cpu().numpy())
    matrix = np.concatenate(chunks, axis=0).astype(np.float64)
    if not np.isfinite(matrix).all():
        bad = int(np.argwhere(~np.isfinite(matrix).all(axis=1))[0, 0])
        raise ExportError(
            f"non-finite embedding for sentence {bad} ({sentences[bad]!r})")
    return matrix


def export(spec: ExportSpec) -> dict:
    """Run one extraction and write the embjson file; returns a summary."""
    sentences = canonical_sentences(spec.sentences_path)
    matrix = extract_matrix(spec.checkpoint, spec.family, sentences,
                            batch_size=spec.batch_size, device=spec.device)
    write_embjson(spec.out_path, model_name=spec.checkpoint,
                  sentences=sentences, matrix=matrix)
    return {"model": spec.checkpoint, "family": Family(spec.family).value,
            "count": matrix.shape[0], "dim": matrix.shape[1],
            "out": str(spec.out_path)}
