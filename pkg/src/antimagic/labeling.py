"""Edge labelings, induced vertex weights, and verifiable certificates.

A labeling assigns the integers 1..q bijectively to the edges of a graph; the
weight of a vertex is the sum of the labels on its incident edges.  The
labeling is *local antimagic* when every pair of adjacent vertices gets
distinct weights, so the weights form a proper vertex coloring.  All
arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph
from .jsonio import check_version, stamp


class InvalidLabelingError(ValueError):
    """Labeling is not a bijection onto 1..q; carries the first bad label."""

    def __init__(self, message: str, bad_label: int | None = None):
        super().__init__(message)
        self.bad_label = bad_label


class GraphMismatchError(ValueError):
    """Certificate or labeling refers to a different graph."""


def validate_labeling(g: Graph, labels: Sequence[int]) -> None:
    """Raise InvalidLabelingError unless labels is a permutation of 1..q.

    Reports the first duplicated label encountered scanning in edge order,
    or the first out-of-range value.
    """
    if len(labels) != g.q:
        raise InvalidLabelingError(
            f"expected {g.q} labels, got {len(labels)}")
    seen = [False] * (g.q + 1)
    for lab in labels:
        if not isinstance(lab, int) or isinstance(lab, bool) or not 1 <= lab <= g.q:
            raise InvalidLabelingError(
                f"label {lab!r} outside 1..{g.q}", bad_label=lab)
        if seen[lab]:
            raise InvalidLabelingError(f"duplicate label {lab}", bad_label=lab)
        seen[lab] = True


def weights(g: Graph, labels: Sequence[int]) -> list[int]:
    """Induced vertex weights; total is always q(q+1)."""
    validate_labeling(g, labels)
    w = [0] * g.p
    for (a, b), lab in zip(g.edges, labels):
        w[a] += lab
        w[b] += lab
    return w


@dataclass(frozen=True)
class Verdict:
    """Outcome of the adjacency check.

    ``witness`` is the lowest-indexed edge whose endpoints tie, or None.
    """

    ok: bool
    witness: int | None = None

    def to_doc(self):
        return "local-antimagic" if self.ok else {"violation": self.witness}

    @classmethod
    def from_doc(cls, doc) -> "Verdict":
        if doc == "local-antimagic":
            return cls(True)
        if isinstance(doc, dict) and "violation" in doc:
            return cls(False, int(doc["violation"]))
        raise ValueError(f"unrecognized verdict {doc!r}")


def is_local_antimagic(g: Graph, labels: Sequence[int]) -> Verdict:
    w = weights(g, labels)
    for idx, (a, b) in enumerate(g.edges):
        if w[a] == w[b]:
            return Verdict(False, idx)
    return Verdict(True)


def color_count(g: Graph, labels: Sequence[int]) -> int:
    """Number of distinct induced weights over all vertices."""
    return len(set(weights(g, labels)))


@dataclass(frozen=True)
class Certificate:
    """Self-contained, re-checkable record of a labeling and its weights."""

    graph_hash: str
    labels: tuple[int, ...]
    weights: tuple[int, ...]
    color_count: int
    verdict: Verdict

    def to_doc(self) -> dict:
        return stamp({
            "graph_hash": self.graph_hash,
            "labels": list(self.labels),
            "weights": list(self.weights),
            "color_count": self.color_count,
            "verdict": self.verdict.to_doc(),
        })

    @classmethod
    def from_doc(cls, doc: dict) -> "Certificate":
        check_version(doc, "certificate")
        return cls(doc["graph_hash"], tuple(doc["labels"]),
                   tuple(doc["weights"]), doc["color_count"],
                   Verdict.from_doc(doc["verdict"]))


def make_certificate(g: Graph, labels: Sequence[int]) -> Certificate:
    w = weights(g, labels)
    verdict = Verdict(True)
    for idx, (a, b) in enumerate(g.edges):
        if w[a] == w[b]:
            verdict = Verdict(False, idx)
            break
    return Certificate(g.content_hash(), tuple(labels), tuple(w),
                       len(set(w)), verdict)


def verify_certificate(cert: Certificate, g: Graph) -> bool:
    """Recompute everything from cert.labels and compare.

    Raises GraphMismatchError if the certificate references another graph;
    returns False for any discrepancy (including a non-bijective labeling).
    """
    if cert.graph_hash != g.content_hash():
        raise GraphMismatchError(
            f"certificate is for graph {cert.graph_hash[:12]}..., "
            f"not {g.content_hash()[:12]}...")
    try:
        fresh = make_certificate(g, cert.labels)
    except InvalidLabelingError:
        return False
    return fresh == cert


def labeling_to_doc(g: Graph, labels: Sequence[int]) -> dict:
    return stamp({"graph_hash": g.content_hash(), "labels": list(labels)})


def labeling_from_doc(doc: dict, g: Graph) -> list[int]:
    check_version(doc, "labeling")
    if doc["graph_hash"] != g.content_hash():
        raise GraphMismatchError("labeling is for a different graph")
    labels = [int(x) for x in doc["labels"]]
    validate_labeling(g, labels)
    return labels
