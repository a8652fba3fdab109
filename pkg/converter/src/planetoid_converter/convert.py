"""Assemble the public Planetoid distribution files into one validated bundle.

The distribution ships, per dataset NAME, seven pickled blocks plus a text
index: ind.NAME.{x,y,tx,ty,allx,ally,graph,test.index}. Feature/label rows
arrive split into an "all but test" block and a test block ordered by the
test index file, so test rows must be moved to their graph positions.
Citeseer's test index has gaps (isolated papers); the affected rows are
filled with zeros, the established workaround.
"""

from __future__ import annotations

import json
import pickle
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from .bundle_writer import write_bundle

# Published statistics per dataset. "links" counts directed citation entries
# (duplicates included) the way the dataset descriptions report edges; the
# deduplicated simple graph is smaller and its pair count is recorded in the
# conversion report alongside.
EXPECTED = {
    "citeseer": {"nodes": 3327, "links": 4732, "classes": 6, "features": 3703},
    "cora": {"nodes": 2708, "links": 5429, "classes": 7, "features": 1433},
    "pubmed": {"nodes": 19717, "links": 44338, "classes": 3, "features": 500},
}
VAL_SIZE = 500


class ConversionError(RuntimeError):
    """Missing inputs or statistics that disagree with the published table."""


@dataclass
class ConversionReport:
    dataset: str
    nodes: int
    citation_links: int
    unique_pairs: int
    classes: int
    feature_dim: int
    test_index_gaps: int
    self_loop_entries: int
    duplicate_entries: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _load_pickle(path: Path):
    with open(path, "rb") as f:
        return pickle.load(f, encoding="latin1")


def _read_raw(dataset: str, input_dir: Path) -> dict:
    blocks = {}
    missing = []
    for ext in ("x", "y", "tx", "ty", "allx", "ally", "graph"):
        path = input_dir / f"ind.{dataset}.{ext}"
        if not path.exists():
            missing.append(path.name)
        else:
            blocks[ext] = _load_pickle(path)
    index_path = input_dir / f"ind.{dataset}.test.index"
    if not index_path.exists():
        missing.append(index_path.name)
    if missing:
        raise ConversionError(f"missing input files: {', '.join(missing)}")
    blocks["test_index"] = np.loadtxt(index_path, dtype=np.int64)
    return blocks


def _assemble_rows(blocks: dict) -> tuple[sp.csr_matrix, np.ndarray, int]:
    """Merge allx/tx into node order; returns (features, onehot_labels, gap_count)."""
    test_reorder = blocks["test_index"]          # tx row k belongs to node test_reorder[k]
    test_sorted = np.sort(test_reorder)
    lo, hi = int(test_sorted[0]), int(test_sorted[-1])
    span = hi - lo + 1
    gaps = span - len(test_sorted)

    tx = sp.csr_matrix(blocks["tx"], dtype=np.float64)
    ty = np.asarray(blocks["ty"])
    if gaps:
        tx_full = sp.lil_matrix((span, tx.shape[1]), dtype=np.float64)
        tx_full[test_sorted - lo] = tx
        tx = tx_full.tocsr()
        ty_full = np.zeros((span, ty.shape[1]), dtype=ty.dtype)
        ty_full[test_sorted - lo] = ty
        ty = ty_full

    features = sp.vstack([sp.csr_matrix(blocks["allx"], dtype=np.float64), tx]).tolil()
    onehot = np.vstack([np.asarray(blocks["ally"]), ty])
    # move test rows from their stacked positions to their graph positions
    features[test_reorder] = features[test_sorted]
    onehot[test_reorder] = onehot[test_sorted]
    features = features.tocsr()
    features.sort_indices()
    return features, onehot, gaps


def _assemble_graph(graph_dict: dict, n: int) -> tuple[sp.csr_matrix, dict]:
    total_entries = 0
    self_loops = 0
    rows, cols = [], []
    for node, neighbors in graph_dict.items():
        total_entries += len(neighbors)
        for nb in neighbors:
            if nb == node:
                self_loops += 1
            else:
                rows.append(node)
                cols.append(nb)
    adj = sp.coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    adj = adj.maximum(adj.T).tocsr()   # symmetrize (union) and deduplicate
    adj.data[:] = 1.0
    adj.sort_indices()
    stats = {
        "citation_links": total_entries // 2,
        "unique_pairs": adj.nnz // 2,
        "self_loop_entries": self_loops,
        "duplicate_entries": total_entries - self_loops - adj.nnz,
    }
    return adj, stats


def convert(dataset: str, input_dir, output_path) -> ConversionReport:
    """Convert one dataset; aborts with a stat diff if the result disagrees
    with the published table."""
    if dataset not in EXPECTED:
        raise ConversionError(f"unknown dataset {dataset!r}; expected one of {sorted(EXPECTED)}")
    blocks = _read_raw(dataset, Path(input_dir))

    features, onehot, gaps = _assemble_rows(blocks)
    labels = onehot.argmax(axis=1).astype(np.int64)  # gap rows are all-zero -> class 0, unused by splits
    n = features.shape[0]
    adj, graph_stats = _assemble_graph(blocks["graph"], n)

    num_train = np.asarray(blocks["y"]).shape[0]
    train = np.arange(num_train, dtype=np.int64)
    val = np.arange(num_train, num_train + VAL_SIZE, dtype=np.int64)
    test = np.sort(blocks["test_index"])

    report = ConversionReport(
        dataset=dataset,
        nodes=n,
        citation_links=graph_stats["citation_links"],
        unique_pairs=graph_stats["unique_pairs"],
        classes=int(onehot.shape[1]),
        feature_dim=int(features.shape[1]),
        test_index_gaps=gaps,
        self_loop_entries=graph_stats["self_loop_entries"],
        duplicate_entries=graph_stats["duplicate_entries"],
    )

    expected = EXPECTED[dataset]
    actual = {"nodes": report.nodes, "links": report.citation_links,
              "classes": report.classes, "features": report.feature_dim}
    diffs = [f"{key}: got {actual[key]}, expected {expected[key]}"
             for key in expected if actual[key] != expected[key]]
    if diffs:
        raise ConversionError(f"{dataset} statistics disagree with the published table: "
                              + "; ".join(diffs))

    write_bundle(output_path, dataset, features, labels, adj,
                 report.classes, train, val, test)
    report_path = Path(output_path).with_suffix(".report.json")
    report_path.write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    return report
