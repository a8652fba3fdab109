"""Writer for the SEGB1 graph-bundle container.

Layout (all little-endian):

    magic "SEGB1" | name_len u8 | name | N u64 | F u64 | C u64 | E u64 |
    feat_flag u8 (0 dense, 1 csr) |
    graph CSR: indptr (N+1) i64, indices (2E) i32 |
    features (csr): nnz u64, indptr (N+1) i64, indices i32, values f64 |
    labels N u16 |
    train u64 + i32[] | val u64 + i32[] | test u64 + i32[] |
    crc32 u32 over all preceding bytes

E is the unordered pair count of the simple symmetric graph, so the graph
indices array holds exactly 2E entries (both directions, rows sorted).
"""

from __future__ import annotations

import struct
import zlib

import numpy as np
import scipy.sparse as sp

MAGIC = b"SEGB1"
FEAT_CSR = 1


def write_bundle(path, name: str, features: sp.csr_matrix, labels: np.ndarray,
                 adjacency: sp.csr_matrix, num_classes: int,
                 train: np.ndarray, val: np.ndarray, test: np.ndarray) -> None:
    """Serialize one dataset; ``adjacency`` must be simple (0/1, symmetric, no loops)."""
    n, f = features.shape
    adjacency = adjacency.tocsr()
    adjacency.sort_indices()
    if adjacency.nnz % 2:
        raise ValueError("adjacency entry count must be even (symmetric graph)")
    pairs = adjacency.nnz // 2

    features = features.tocsr()
    features.sort_indices()

    encoded = name.encode()
    parts = [
        MAGIC,
        struct.pack("<B", len(encoded)), encoded,
        struct.pack("<QQQQ", n, f, num_classes, pairs),
        struct.pack("<B", FEAT_CSR),
        adjacency.indptr.astype("<i8").tobytes(),
        adjacency.indices.astype("<i4").tobytes(),
        struct.pack("<Q", features.nnz),
        features.indptr.astype("<i8").tobytes(),
        features.indices.astype("<i4").tobytes(),
        features.data.astype("<f8").tobytes(),
        np.asarray(labels, dtype="<u2").tobytes(),
    ]
    for idx in (train, val, test):
        arr = np.asarray(idx, dtype="<i4")
        parts.append(struct.pack("<Q", len(arr)))
        parts.append(arr.tobytes())
    payload = b"".join(parts)
    with open(path, "wb") as out:
        out.write(payload)
        out.write(struct.pack("<I", zlib.crc32(payload) & 0xFFFFFFFF))
