"""Explicit local antimagic labelings for friendship coronas with one pendant
per vertex (friendship(n) o null_graph(1)).

For every n >= 2 these graphs admit a labeling with exactly 2n+3 distinct
induced weights, which is optimal.  The labeling is given in closed form by
two 3-row integer matrices whose columns all share the same sum, so every
inner u-vertex gets one common weight and every inner v-vertex another.  The
odd and even cases use different matrices; n=2 and n=4 do not fit either
pattern and are served from pre-computed certificates bundled with the
package and re-verified on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import jsonio
from .graphs import (HUB, HUB_PENDANT, INNER, PENDANT, Graph, VertexRole,
                     friendship_corona)
from .labeling import Certificate, make_certificate, verify_certificate


class ConstructionError(RuntimeError):
    """Internal consistency failure while materializing a labeling."""


class CertificateNotFoundError(RuntimeError):
    """No stored certificate and the fallback search did not produce one."""


def _exact_div(a: int, b: int) -> int:
    quot, rem = divmod(a, b)
    if rem:
        raise ConstructionError(f"{a} is not divisible by {b}")
    return quot


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"odd-case formulas need odd n >= 3, got {n}")


def _require_even(n: int) -> None:
    if n < 6 or n % 2:
        raise ValueError(f"even-case formulas need even n >= 6, got {n}")


def _check_k(k: int) -> None:
    if k not in (1, 2, 3):
        raise ValueError(f"row index k must be 1, 2 or 3, got {k}")


def _check_col(i: int, cols: int) -> None:
    if not 1 <= i <= cols:
        raise ValueError(f"column index i must be in 1..{cols}, got {i}")


# -- matrix entries, odd n >= 3 ----------------------------------------------
# Rows label, per triangle i: (1) the u-pendant edge, (2) the hub-u spoke,
# (3) the triangle edge u_i v_i for the u-matrix; (1) is shared with the
# u-matrix row 3, (2) the hub-v spoke, (3) the v-pendant edge for the
# v-matrix.  Every column of a matrix has the same sum.


def odd_u_entry(k: int, i: int, n: int) -> int:
    _require_odd(n)
    _check_k(k)
    _check_col(i, n)
    if k == 1:
        return 4 * n + (i + 1) // 2 if i % 2 else _exact_div(9 * n + 1, 2) + i // 2
    if k == 2:
        return _exact_div(7 * n + 1, 2) + (i - 1) // 2 if i % 2 else 3 * n + i // 2
    return 3 * n + 1 - i


def odd_v_entry(k: int, i: int, n: int) -> int:
    _require_odd(n)
    _check_k(k)
    _check_col(i, n)
    if k == 1:
        return 3 * n + 1 - i
    if k == 2:
        return _exact_div(3 * n + 1, 2) + (i - 1) // 2 if i % 2 else n + i // 2
    return (i + 1) // 2 if i % 2 else _exact_div(n + 1, 2) + i // 2


def odd_u_column_sum(n: int) -> int:
    _require_odd(n)
    return _exact_div(21 * n + 3, 2)


def odd_v_column_sum(n: int) -> int:
    _require_odd(n)
    return _exact_div(9 * n + 3, 2)


# -- matrix entries, even n >= 6 ---------------------------------------------
# Columns run over the first n-1 triangles; the n-th triangle and the hub
# pendant take the six special labels handled in construct_even.


def even_u_entry(k: int, i: int, n: int) -> int:
    _require_even(n)
    _check_k(k)
    _check_col(i, n - 1)
    if k == 1:
        return 4 * n + 3 + (i - 1) // 2 if i % 2 else 9 * n // 2 + 2 + i // 2
    if k == 2:
        return 7 * n // 2 + 3 + (i - 1) // 2 if i % 2 else 3 * n + 3 + i // 2
    return 3 * n + 3 - i


def even_v_entry(k: int, i: int, n: int) -> int:
    _require_even(n)
    _check_k(k)
    _check_col(i, n - 1)
    if k == 1:
        return 3 * n + 3 - i
    if k == 2:
        return 3 * n // 2 + (i - 1) // 2 if i % 2 else n + i // 2
    return (i + 3) // 2 if i % 2 else n // 2 + 1 + i // 2


def even_u_column_sum(n: int) -> int:
    _require_even(n)
    return 21 * n // 2 + 8


def even_v_column_sum(n: int) -> int:
    _require_even(n)
    return 9 * n // 2 + 4


@dataclass(frozen=True)
class LabelingMatrix:
    """A 3 x cols block of the labeling, materialized for inspection."""

    cols: int
    entries: tuple[tuple[int, ...], ...]  # three rows

    @classmethod
    def build(cls, entry_fn, cols: int, n: int) -> "LabelingMatrix":
        rows = tuple(tuple(entry_fn(k, i, n) for i in range(1, cols + 1))
                     for k in (1, 2, 3))
        return cls(cols, rows)

    def column_sum(self, i: int) -> int:
        _check_col(i, self.cols)
        return sum(row[i - 1] for row in self.entries)

    def values(self) -> list[int]:
        return [value for row in self.entries for value in row]


def odd_u_matrix(n: int) -> LabelingMatrix:
    return LabelingMatrix.build(odd_u_entry, n, n)


def odd_v_matrix(n: int) -> LabelingMatrix:
    return LabelingMatrix.build(odd_v_entry, n, n)


def even_u_matrix(n: int) -> LabelingMatrix:
    return LabelingMatrix.build(even_u_entry, n - 1, n)


def even_v_matrix(n: int) -> LabelingMatrix:
    return LabelingMatrix.build(even_v_entry, n - 1, n)


# -- assembled constructions --------------------------------------------------

# Color sets used as cross-checks for small cases.  The n=6 entry lists 14
# values although the labeling induces 15 distinct weights; the verifier's
# count is authoritative and reports record both.
REFERENCE_COLOR_SETS: dict[int, frozenset[int]] = {
    2: frozenset({5, 7, 9, 10, 11, 20, 28}),
    3: frozenset(range(1, 4)) | frozenset(range(13, 17)) | frozenset({33, 64}),
    4: frozenset({5, 6, 7, 9, 10, 16, 17, 18, 21, 46, 85}),
    6: frozenset(range(1, 7)) | frozenset(range(27, 32)) | frozenset({21, 71, 211}),
}


@dataclass(frozen=True)
class ConstructionReport:
    n: int
    case: str  # "odd" | "even" | "small"
    graph: Graph
    certificate: Certificate
    closed_forms: dict[str, int]
    colors: frozenset[int]
    reference_colors: frozenset[int] | None


def chi_la_friendship_o1(n: int) -> int:
    """Exact local antimagic chromatic number of friendship(n) o K1: 2n+3."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 2 * n + 3


def _named_vertices(g: Graph, n: int):
    hub = g.vertex_with_role(VertexRole(HUB))
    u = [g.vertex_with_role(VertexRole(INNER, "u", i)) for i in range(1, n + 1)]
    v = [g.vertex_with_role(VertexRole(INNER, "v", i)) for i in range(1, n + 1)]
    x1 = g.vertex_with_role(VertexRole(HUB_PENDANT, j=1))
    up = [g.vertex_with_role(VertexRole(PENDANT, "u", i, 1)) for i in range(1, n + 1)]
    vp = [g.vertex_with_role(VertexRole(PENDANT, "v", i, 1)) for i in range(1, n + 1)]
    return hub, u, v, x1, up, vp


def _check(condition: bool, what: str) -> None:
    if not condition:
        raise ConstructionError(f"construction bug: {what}")


def construct_odd(n: int) -> ConstructionReport:
    """Closed-form labeling for odd n >= 3 with exactly 2n+3 colors."""
    _require_odd(n)
    g = friendship_corona(n, 1)
    hub, u, v, x1, up, vp = _named_vertices(g, n)
    labels = [0] * g.q
    labels[g.edge_index(hub, x1)] = 5 * n + 1
    for i in range(1, n + 1):
        labels[g.edge_index(u[i - 1], up[i - 1])] = odd_u_entry(1, i, n)
        labels[g.edge_index(hub, u[i - 1])] = odd_u_entry(2, i, n)
        labels[g.edge_index(u[i - 1], v[i - 1])] = odd_u_entry(3, i, n)
        labels[g.edge_index(hub, v[i - 1])] = odd_v_entry(2, i, n)
        labels[g.edge_index(v[i - 1], vp[i - 1])] = odd_v_entry(3, i, n)
    cert = make_certificate(g, labels)
    w = cert.weights
    closed = {
        "w_hub": (n + 1) * (5 * n + 1),
        "w_inner_u": odd_u_column_sum(n),
        "w_inner_v": odd_v_column_sum(n),
        "w_hub_pendant": 5 * n + 1,
        "w_u_pendant_min": 4 * n + 1,
        "w_u_pendant_max": 5 * n,
        "w_v_pendant_min": 1,
        "w_v_pendant_max": n,
    }
    _check(cert.verdict.ok, f"odd n={n} labeling is not local antimagic")
    _check(w[hub] == closed["w_hub"], f"odd n={n} hub weight {w[hub]}")
    _check(all(w[x] == closed["w_inner_u"] for x in u), f"odd n={n} u weights")
    _check(all(w[x] == closed["w_inner_v"] for x in v), f"odd n={n} v weights")
    _check(w[x1] == 5 * n + 1, f"odd n={n} hub pendant weight")
    _check({w[x] for x in up} == set(range(4 * n + 1, 5 * n + 1)),
           f"odd n={n} u-pendant weights")
    _check({w[x] for x in vp} == set(range(1, n + 1)),
           f"odd n={n} v-pendant weights")
    _check(cert.color_count == 2 * n + 3,
           f"odd n={n} color count {cert.color_count} != {2 * n + 3}")
    return ConstructionReport(n, "odd", g, cert, closed, frozenset(w),
                              REFERENCE_COLOR_SETS.get(n))


def construct_even(n: int) -> ConstructionReport:
    """Closed-form labeling for even n >= 6 with exactly 2n+3 colors.

    The first n-1 triangles follow the matrices; the last triangle and the
    hub pendant absorb the labels 1, 2n..2n+3 and 3n+3.
    """
    _require_even(n)
    g = friendship_corona(n, 1)
    hub, u, v, x1, up, vp = _named_vertices(g, n)
    labels = [0] * g.q
    labels[g.edge_index(hub, x1)] = 3 * n + 3
    labels[g.edge_index(u[-1], v[-1])] = 1
    labels[g.edge_index(u[-1], up[-1])] = 2 * n + 2
    labels[g.edge_index(hub, u[-1])] = 2 * n
    labels[g.edge_index(v[-1], vp[-1])] = 2 * n + 3
    labels[g.edge_index(hub, v[-1])] = 2 * n + 1
    for i in range(1, n):
        labels[g.edge_index(u[i - 1], up[i - 1])] = even_u_entry(1, i, n)
        labels[g.edge_index(hub, u[i - 1])] = even_u_entry(2, i, n)
        labels[g.edge_index(u[i - 1], v[i - 1])] = even_u_entry(3, i, n)
        labels[g.edge_index(hub, v[i - 1])] = even_v_entry(2, i, n)
        labels[g.edge_index(v[i - 1], vp[i - 1])] = even_v_entry(3, i, n)
    cert = make_certificate(g, labels)
    w = cert.weights
    closed = {
        "w_hub": 5 * n * n + 5 * n + 1,
        "w_inner_u": even_u_column_sum(n),
        "w_inner_v": even_v_column_sum(n),
        "w_hub_pendant": 3 * n + 3,
        "w_u_last": 4 * n + 3,
        "w_v_last": 4 * n + 5,
        "w_u_last_pendant": 2 * n + 2,
        "w_v_last_pendant": 2 * n + 3,
        "w_u_pendant_min": 4 * n + 3,
        "w_u_pendant_max": 5 * n + 1,
        "w_v_pendant_min": 2,
        "w_v_pendant_max": n,
    }
    _check(cert.verdict.ok, f"even n={n} labeling is not local antimagic")
    _check(w[hub] == closed["w_hub"], f"even n={n} hub weight {w[hub]}")
    _check(all(w[x] == closed["w_inner_u"] for x in u[:-1]), f"even n={n} u weights")
    _check(all(w[x] == closed["w_inner_v"] for x in v[:-1]), f"even n={n} v weights")
    _check(w[u[-1]] == 4 * n + 3 and w[v[-1]] == 4 * n + 5,
           f"even n={n} last triangle weights")
    _check(w[x1] == 3 * n + 3, f"even n={n} hub pendant weight")
    _check({w[x] for x in up[:-1]} == set(range(4 * n + 3, 5 * n + 2)),
           f"even n={n} u-pendant weights")
    _check({w[x] for x in vp[:-1]} == set(range(2, n + 1)),
           f"even n={n} v-pendant weights")
    _check(w[up[-1]] == 2 * n + 2 and w[vp[-1]] == 2 * n + 3,
           f"even n={n} last pendant weights")
    _check(cert.color_count == 2 * n + 3,
           f"even n={n} color count {cert.color_count} != {2 * n + 3}")
    return ConstructionReport(n, "even", g, cert, closed, frozenset(w),
                              REFERENCE_COLOR_SETS.get(n))


_FIXTURES = {2: "f2_o1_certificate.json", 4: "f4_o1_certificate.json"}


def construct_small(n: int, config=None) -> ConstructionReport:
    """Certificate for n in {2, 4}, loaded from the bundled fixture and
    re-verified; falls back to a solver search if the fixture is absent."""
    if n not in _FIXTURES:
        raise ValueError(f"small cases are n=2 and n=4, got {n}")
    g = friendship_corona(n, 1)
    target = 2 * n + 3
    cert = None
    fixture = resources.files("antimagic").joinpath("fixtures", _FIXTURES[n])
    if fixture.is_file():
        doc = json.loads(fixture.read_text())
        jsonio.check_version(doc, "certificate")
        cert = Certificate.from_doc(doc)
        if not verify_certificate(cert, g):
            raise ConstructionError(f"bundled certificate for n={n} failed "
                                    "re-verification")
    else:
        from .solver import FEASIBLE, SearchConfig, feasible_with_k_colors
        outcome = feasible_with_k_colors(g, target, config or SearchConfig())
        if outcome.status != FEASIBLE:
            raise CertificateNotFoundError(
                f"no certificate with {target} colors found for n={n} "
                f"(search status: {outcome.status})")
        cert = outcome.certificate
    _check(cert.verdict.ok, f"small n={n} certificate is not local antimagic")
    _check(cert.color_count == target,
           f"small n={n} color count {cert.color_count} != {target}")
    return ConstructionReport(n, "small", g, cert, {}, frozenset(cert.weights),
                              REFERENCE_COLOR_SETS.get(n))


def construct(n: int) -> ConstructionReport:
    """Optimal labeling report for friendship(n) o K1, any n >= 2."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n in _FIXTURES:
        return construct_small(n)
    if n % 2:
        return construct_odd(n)
    return construct_even(n)
