"""Small undirected graphs with dense canonical indexing.

Families here are the ones the rest of the package works on: friendship and
fan graphs, cycles, paths, complete and edgeless graphs, and corona products
G o H (one copy of H per vertex of G, joined to it).  Vertex and edge indices
are assigned deterministically so that an edge labeling can be stored as a
flat list and compared across runs:

* vertices: hub first, then the inner vertices in family order, then the
  copies of H grouped by the base vertex they attach to;
* edges: the base graph's edges first (spokes before triangle/path edges),
  then per-copy internal edges followed by the join ("pendant") edges.

Graphs are immutable once built; labelings and certificates reference them by
content hash.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .jsonio import check_version, stamp

# role kinds
HUB = "hub"
INNER = "inner"
HUB_PENDANT = "hub-pendant"
PENDANT = "pendant"
PLAIN = "plain"

_ROLE_KINDS = (HUB, INNER, HUB_PENDANT, PENDANT, PLAIN)


@dataclass(frozen=True)
class VertexRole:
    """Structural role of a vertex; reconstructs the conventional names.

    ``side`` distinguishes the two triangle legs of a friendship graph
    ("u"/"v"); ``i`` is the 1-based inner index, ``j`` the 1-based pendant
    index within its group.  Unused fields stay at their defaults.
    """

    kind: str
    side: str = ""
    i: int = 0
    j: int = 0

    def name(self) -> str:
        if self.kind == HUB:
            return "x"
        if self.kind == INNER:
            return f"{self.side or 'w'}{self.i}"
        if self.kind == HUB_PENDANT:
            return f"x_{self.j}"
        if self.kind == PENDANT:
            return f"{self.side or 'w'}{self.i}^{self.j}"
        return f"p{self.i}"

    def to_doc(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.side:
            doc["side"] = self.side
        if self.i:
            doc["i"] = self.i
        if self.j:
            doc["j"] = self.j
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "VertexRole":
        kind = doc.get("kind")
        if kind not in _ROLE_KINDS:
            raise ValueError(f"unknown vertex role kind {kind!r}")
        return cls(kind, doc.get("side", ""), doc.get("i", 0), doc.get("j", 0))


class Graph:
    """Immutable simple undirected graph with 0-based dense indices."""

    __slots__ = ("p", "q", "edges", "roles", "family", "_adj", "_edge_index",
                 "_role_index", "_hash", "_degrees")

    def __init__(self, p: int, edges, roles=None, family: str | None = None):
        if p < 1:
            raise ValueError("graph order must be at least 1")
        norm = []
        seen = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < p and 0 <= b < p):
                raise ValueError(f"edge ({a},{b}) out of range for order {p}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        self.p = p
        self.q = len(norm)
        self.edges = tuple(norm)
        if roles is None:
            roles = [VertexRole(PLAIN, i=v) for v in range(p)]
        roles = tuple(roles)
        if len(roles) != p:
            raise ValueError("one role per vertex required")
        self.roles = roles
        self.family = family
        adj = [[] for _ in range(p)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        self._adj = tuple(tuple(ns) for ns in adj)
        self._degrees = tuple(len(ns) for ns in adj)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        role_index = {}
        for v, role in enumerate(roles):
            if role in role_index:
                raise ValueError(f"duplicate role {role} on vertices "
                                 f"{role_index[role]} and {v}")
            role_index[role] = v
        self._role_index = role_index
        self._hash = None

    # -- basic queries ----------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def edge_index(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        try:
            return self._edge_index[key]
        except KeyError:
            raise KeyError(f"no edge between {a} and {b}") from None

    def has_edge(self, a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        return key in self._edge_index

    def vertex_with_role(self, role: VertexRole) -> int:
        try:
            return self._role_index[role]
        except KeyError:
            raise KeyError(f"no vertex with role {role}") from None

    def is_connected(self) -> bool:
        if self.p == 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self._adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.p

    def content_hash(self) -> str:
        """Hash of the labeled structure (order + indexed edge list)."""
        if self._hash is None:
            blob = json.dumps({"p": self.p, "edges": self.edges},
                              separators=(",", ":")).encode()
            self._hash = hashlib.sha256(blob).hexdigest()
        return self._hash

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.p == other.p
                and self.edges == other.edges and self.roles == other.roles)

    def __hash__(self):
        return hash((self.p, self.edges))

    def __repr__(self) -> str:
        fam = f" {self.family}" if self.family else ""
        return f"<Graph{fam} p={self.p} q={self.q}>"

    # -- serialization -----------------------------------------------------

    def to_doc(self) -> dict:
        return stamp({
            "family": self.family,
            "p": self.p,
            "q": self.q,
            "edges": [list(e) for e in self.edges],
            "roles": [r.to_doc() for r in self.roles],
        })

    @classmethod
    def from_doc(cls, doc: dict) -> "Graph":
        check_version(doc, "graph")
        roles = [VertexRole.from_doc(r) for r in doc["roles"]]
        g = cls(doc["p"], [tuple(e) for e in doc["edges"]], roles,
                doc.get("family"))
        if g.q != doc["q"]:
            raise ValueError(f"edge count {g.q} does not match stated q={doc['q']}")
        return g

    def to_dot(self, labels=None, weights=None) -> str:
        """GraphViz source; optional edge labels and per-vertex weights."""
        lines = ["graph G {"]
        for v, role in enumerate(self.roles):
            text = role.name()
            if weights is not None:
                text += f"\\nw={weights[v]}"
            lines.append(f'  {v} [label="{text}"];')
        for idx, (a, b) in enumerate(self.edges):
            if labels is not None:
                lines.append(f'  {a} -- {b} [label="{labels[idx]}"];')
            else:
                lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- families ---------------------------------------------------------------


def friendship(n: int) -> Graph:
    """n triangles sharing one hub: order 2n+1, size 3n.  Requires n >= 2."""
    if n < 2:
        raise ValueError(f"friendship graph needs n >= 2, got {n}")
    roles = [VertexRole(HUB)]
    roles += [VertexRole(INNER, "u", i) for i in range(1, n + 1)]
    roles += [VertexRole(INNER, "v", i) for i in range(1, n + 1)]
    edges = [(0, i) for i in range(1, n + 1)]          # hub-u spokes
    edges += [(0, n + i) for i in range(1, n + 1)]     # hub-v spokes
    edges += [(i, n + i) for i in range(1, n + 1)]     # triangle closers
    return Graph(2 * n + 1, edges, roles, family=f"friendship({n})")


def fan(n: int) -> Graph:
    """Hub joined to every vertex of a path on n vertices.  Requires n >= 2."""
    if n < 2:
        raise ValueError(f"fan graph needs n >= 2, got {n}")
    roles = [VertexRole(HUB)]
    roles += [VertexRole(INNER, "v", i) for i in range(1, n + 1)]
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i + 1) for i in range(1, n)]
    return Graph(n + 1, edges, roles, family=f"fan({n})")


def null_graph(m: int) -> Graph:
    """m isolated vertices."""
    if m < 1:
        raise ValueError(f"null graph needs m >= 1, got {m}")
    return Graph(m, [], family=f"null({m})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    roles = [VertexRole(INNER, "", i + 1) for i in range(n)]
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, edges, roles, family=f"cycle({n})")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    roles = [VertexRole(INNER, "", i + 1) for i in range(n)]
    edges = [(i, i + 1) for i in range(n - 1)]
    return Graph(n, edges, roles, family=f"path({n})")


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    roles = [VertexRole(INNER, "", i + 1) for i in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, edges, roles, family=f"complete({n})")


def corona(g: Graph, h: Graph) -> Graph:
    """Corona product g o h: g plus g.p disjoint copies of h, the i-th copy
    fully joined to vertex i of g.

    When h is edgeless the copies are pendant groups and roles follow the
    base vertex (hub pendants x_j, inner pendants u_i^j / v_i^j).
    """
    p = g.p * (1 + h.p)
    roles = list(g.roles)
    edges = list(g.edges)
    edgeless = h.q == 0
    for base in range(g.p):
        start = g.p + base * h.p
        base_role = g.roles[base]
        for pos in range(h.p):
            v = start + pos
            if edgeless and base_role.kind == HUB:
                roles.append(VertexRole(HUB_PENDANT, j=pos + 1))
            elif edgeless and base_role.kind == INNER:
                roles.append(VertexRole(PENDANT, base_role.side, base_role.i,
                                        pos + 1))
            else:
                roles.append(VertexRole(PLAIN, i=v))
        edges += [(start + a, start + b) for a, b in h.edges]
        edges += [(base, start + pos) for pos in range(h.p)]
    family = None
    if g.family and h.family:
        family = f"corona({g.family},{h.family})"
    return Graph(p, edges, roles, family=family)


def friendship_corona(n: int, m: int) -> Graph:
    """friendship(n) o null_graph(m): p=(2n+1)(1+m), q=m(2n+1)+3n."""
    return corona(friendship(n), null_graph(m))


def fan_corona(n: int, m: int) -> Graph:
    """fan(n) o null_graph(m): q=m(n+1)+2n-1."""
    return corona(fan(n), null_graph(m))
