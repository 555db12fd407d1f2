"""Helper utility functions."""

import hashlib
import difflib
import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence


def canonical_json(data: Any) -> str:
    """Serialize with sorted keys and a fixed layout for diffable output."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def file_digest(filepath: str) -> str:
    """SHA-256 hex digest of a file's bytes."""
    sha = hashlib.sha256()
    with open(filepath, 'rb') as f:
        for chunk in iter(lambda: f.read(65536), b''):
            sha.update(chunk)
    return sha.hexdigest()


def format_fraction(value: Fraction) -> str:
    """Exact 'p/q' text, 'p' for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def chunked(items: Sequence, n_chunks: int) -> List[List]:
    """Split a sequence into at most n_chunks contiguous, order-preserving chunks."""
    n_chunks = max(1, min(n_chunks, len(items))) if items else 1
    size, extra = divmod(len(items), n_chunks)
    chunks, start = [], 0
    for i in range(n_chunks):
        stop = start + size + (1 if i < extra else 0)
        chunks.append(list(items[start:stop]))
        start = stop
    return chunks


def near_matches(name: str, candidates: Iterable[str], n: int = 3) -> List[str]:
    """Closest spellings of an unknown identifier."""
    return difflib.get_close_matches(name, sorted(candidates), n=n, cutoff=0.5)
