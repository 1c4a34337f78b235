"""Hot loops behind model-set distance computation.

The one kernel that dominates runtime takes every candidate bitmask to
its minimum remapped Hamming distance against a target bitmask array:

    out[i] = min over j of table[popcount(cands[i] ^ targets[j])]

Two interchangeable backends:

* ``numba``: nopython nested loop with early exit (default when numba
  imports; first call pays JIT warm-up, cached afterwards)
* ``numpy``: chunked broadcasting fallback, no compilation step

Selected once at import from BELIEFMERGE_BACKEND in {auto, numba, numpy};
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

_CHUNK = 4096  # numpy fallback materializes a CHUNK x len(targets) block


def _min_mapped_numpy(cands: np.ndarray, targets: np.ndarray, table: np.ndarray) -> np.ndarray:
    out = np.empty(cands.shape[0], dtype=np.int64)
    for lo in range(0, cands.shape[0], _CHUNK):
        block = cands[lo : lo + _CHUNK, None] ^ targets[None, :]
        out[lo : lo + _CHUNK] = table[np.bitwise_count(block)].min(axis=1)
    return out


try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

if numba is not None:

    @numba.njit(cache=True)
    def _min_mapped_numba(cands, targets, table):  # pragma: no cover - exercised via dispatch
        floor = table[0]
        for v in table:
            if v < floor:
                floor = v
        out = np.empty(cands.shape[0], dtype=np.int64)
        for i in range(cands.shape[0]):
            best = np.int64(0x7FFFFFFFFFFFFFFF)
            for j in range(targets.shape[0]):
                x = cands[i] ^ targets[j]
                # SWAR popcount; masks fit int64, inputs stay below 2^63
                x = x - ((x >> 1) & 0x5555555555555555)
                x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
                x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
                x = (x * 0x0101010101010101) >> 56
                v = table[x]
                if v < best:
                    best = v
                    if best == floor:
                        break
            out[i] = best
        return out

else:
    _min_mapped_numba = None


def _resolve_backend() -> str:
    choice = os.environ.get("BELIEFMERGE_BACKEND", "auto").lower()
    if choice not in {"auto", "numba", "numpy"}:
        raise ValueError(f"BELIEFMERGE_BACKEND={choice!r}: expected auto, numba or numpy")
    if choice == "numpy":
        return "numpy"
    if _min_mapped_numba is None:
        if choice == "numba":
            raise RuntimeError("BELIEFMERGE_BACKEND=numba but numba is not importable")
        return "numpy"
    return "numba"


_BACKEND = _resolve_backend()


def backend() -> str:
    """Name of the kernel backend resolved at import time."""
    return _BACKEND


def min_mapped_distance(cands: np.ndarray, targets: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Minimum of table[popcount(c ^ t)] over targets, per candidate."""
    if targets.shape[0] == 0:
        raise ValueError("empty target set")
    cands = np.ascontiguousarray(cands, dtype=np.int64)
    targets = np.ascontiguousarray(targets, dtype=np.int64)
    table = np.ascontiguousarray(table, dtype=np.int64)
    if _BACKEND == "numba":
        return _min_mapped_numba(cands, targets, table)
    return _min_mapped_numpy(cands, targets, table)
