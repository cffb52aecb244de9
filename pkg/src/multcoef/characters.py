"""Irreducible characters of S_n by the Murnaghan-Nakayama rule.

Border strips are removed on beta-sets: with ``β_i = λ_i + (ℓ - i)``, removing
a rim hook of length ``r`` means replacing some ``β_i`` by ``β_i - r`` when that
value is free, and the sign is the parity of the beta numbers jumped over.

Full tables can be cached on disk, one canonical JSON file per n with a
SHA-256 of the payload.  A file that fails to parse or verify is ignored and
rewritten.  A lock file makes concurrent builders for the same n wait for
each other rather than duplicate the work.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Optional, Sequence

from filelock import FileLock

from .partitions import partitions_list

__all__ = ["CharacterTable", "character", "character_table", "z_alpha"]

CACHE_VERSION = 1


def z_alpha(alpha: Sequence[int]) -> int:
    """Centralizer order of a permutation with cycle type ``alpha``."""
    z = 1
    for part, mult in Counter(alpha).items():
        z *= part**mult * factorial(mult)
    return z


@lru_cache(maxsize=1 << 20)
def _mn(beta: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    # beta: strictly decreasing beta-set; alpha: remaining cycle lengths, largest first
    if not alpha:
        return 1
    r = alpha[0]
    rest = alpha[1:]
    present = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in present:
            continue
        # beta numbers strictly between nb and b each flip the sign once
        height = sum(1 for x in beta if nb < x < b)
        new = tuple(sorted(beta[:idx] + beta[idx + 1:] + (nb,), reverse=True))
        val = _mn(new, rest)
        if val:
            total += -val if height % 2 else val
    return total


def character(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """χ^λ evaluated on a permutation of cycle type ``alpha``."""
    lam = tuple(lam)
    if sum(lam) != sum(alpha):
        raise ValueError("character arguments must have the same size")
    ell = len(lam)
    beta = tuple(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, tuple(sorted((a for a in alpha if a), reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[tuple[int, ...], ...]
    values: tuple[tuple[int, ...], ...]  # values[i][j] = χ^{partitions[i]}(partitions[j])
    z: tuple[int, ...]

    def index(self, lam: Sequence[int]) -> int:
        return self._index()[tuple(lam)]

    def _index(self) -> dict:
        cached = self.__dict__.get("_idx")
        if cached is None:
            cached = {p: i for i, p in enumerate(self.partitions)}
            object.__setattr__(self, "_idx", cached)
        return cached

    def row(self, lam: Sequence[int]) -> tuple[int, ...]:
        return self.values[self.index(lam)]

    def value(self, lam: Sequence[int], alpha: Sequence[int]) -> int:
        return self.values[self.index(lam)][self.index(alpha)]

    def to_payload(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "n": self.n,
            "partitions": [list(p) for p in self.partitions],
            "values": [[str(v) for v in row] for row in self.values],
            "z": [str(v) for v in self.z],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "CharacterTable":
        if payload.get("version") != CACHE_VERSION:
            raise ValueError("cache version mismatch")
        return cls(
            int(payload["n"]),
            tuple(tuple(p) for p in payload["partitions"]),
            tuple(tuple(int(v) for v in row) for row in payload["values"]),
            tuple(int(v) for v in payload["z"]),
        )


def _compute_table(n: int) -> CharacterTable:
    parts = partitions_list(n)
    values = tuple(tuple(character(lam, alpha) for alpha in parts) for lam in parts)
    return CharacterTable(n, parts, values, tuple(z_alpha(a) for a in parts))


def _encode(table: CharacterTable) -> bytes:
    body = json.dumps(table.to_payload(), sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(body.encode()).hexdigest()
    return json.dumps({"sha256": digest, "table": json.loads(body)}, sort_keys=True, separators=(",", ":")).encode()


def _decode(raw: bytes, n: int) -> Optional[CharacterTable]:
    try:
        doc = json.loads(raw)
        body = json.dumps(doc["table"], sort_keys=True, separators=(",", ":"))
        if hashlib.sha256(body.encode()).hexdigest() != doc["sha256"]:
            return None
        table = CharacterTable.from_payload(doc["table"])
    except (ValueError, KeyError, TypeError):
        return None
    if table.n != n or table.partitions != partitions_list(n):
        return None
    return table


def _cache_path(cache_dir: Path, n: int) -> Path:
    return cache_dir / f"chartable-v{CACHE_VERSION}-n{n}.json"


_memory: dict[int, CharacterTable] = {}


def character_table(n: int, cache_dir: Optional[os.PathLike] = None) -> CharacterTable:
    """Complete character table of S_n, optionally backed by an on-disk cache."""
    if n in _memory:
        return _memory[n]
    if cache_dir is None:
        table = _compute_table(n)
        _memory[n] = table
        return table
    directory = Path(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = _cache_path(directory, n)
    with FileLock(str(path) + ".lock"):
        table = None
        if path.exists():
            table = _decode(path.read_bytes(), n)
        if table is None:
            table = _compute_table(n)
            fd, tmp = tempfile.mkstemp(dir=directory, prefix=path.name, suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as fh:
                    fh.write(_encode(table))
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
    _memory[n] = table
    return table


def clear_memory_cache() -> None:
    _memory.clear()
