"""The canonical instruction list every embedding file must follow."""

from importlib import resources
from pathlib import Path
from typing import List, Optional


def canonical_sentences(path: Optional[str] = None) -> List[str]:
    """Sentences in canonical order, from a file or the packaged copy."""
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
    else:
        text = resources.files("alm_exporter").joinpath(
            "data/canonical_sentences.txt").read_text(encoding="utf-8")
    sentences = [line for line in text.splitlines() if line]
    if len(sentences) != 108:
        raise ValueError(
            f"canonical sentence list must hold 108 lines, got {len(sentences)}")
    return sentences
