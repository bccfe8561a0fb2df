"""Leveled trees, level-by-level verification, and JSON/DOT export.

Three trees share one shape:

* ``farey``: tagged Farey intervals, root ``((0/1,1/0),(0,0))``, grown by
  the closed-form children rule and checked against the parent map;
* ``terminal``: terminal pairs, root ``(1,1,(1,1))``, grown by the
  two-line recursion and checked against the parent map;
* ``young``: the image of the Farey tree under the interval-to-terminal-pair
  map, level by level.

The verifier walks levels ``0..N`` keeping only adjacent levels when
streaming, so memory is bounded by the widest level.
"""

from __future__ import annotations

import io
import json
import time
from dataclasses import dataclass, field
from typing import Iterator, Literal

import numpy as np

from . import _levels as L
from .errors import DomainError, GuardError
from .exact_rational import ExtendedRational
from .farey import FareyVertex, farey_intervals
from .terminal import (
    DEFAULT_ENUMERATION_GUARD,
    TerminalPair,
    decompress,
    enumerate_E_lshapes,
)
from .young import suranyi_table, young_terminal_pairs

__all__ = [
    "LeveledTree",
    "LevelStats",
    "VerificationReport",
    "build_tree",
    "verify",
    "verify_theorem1",
    "verify_isomorphism",
    "verify_corollary2",
    "export",
    "load_json",
    "level_size",
    "KINDS",
    "MODES",
    "REFERENCE_HEIGHT",
]

Kind = Literal["farey", "terminal", "young"]
KINDS = ("farey", "terminal", "young")
MODES = ("theorem1", "isomorphism", "corollary2", "all")

# height up to which the two trees were previously compared by computer
REFERENCE_HEIGHT = 1000

DEFAULT_RESIDENT_BUDGET = 20_000_000
DEFAULT_STREAM_BUDGET = 12_000_000


@dataclass
class LeveledTree:
    """Levels ``0..height`` as row arrays plus parent indices.

    ``levels[k]`` is an int64 array in canonical order (see
    :mod:`fareytree._levels` for the column layout); ``parents[k][i]`` is
    the row of the parent of ``levels[k][i]`` in ``levels[k-1]`` (empty for
    the root level).
    """

    kind: str
    height: int
    levels: list[np.ndarray]
    parents: list[np.ndarray]

    def __len__(self):
        return sum(len(x) for x in self.levels)

    def vertex(self, k: int, i: int) -> FareyVertex | TerminalPair:
        return _to_vertex(self.kind, self.levels[k][i])

    def vertices(self, k: int) -> list[FareyVertex | TerminalPair]:
        return [_to_vertex(self.kind, row) for row in self.levels[k]]

    def parent(self, k: int, i: int) -> int | None:
        return None if k == 0 else int(self.parents[k][i])

    def children(self, k: int, i: int) -> list[int]:
        if k >= self.height:
            return []
        return np.flatnonzero(self.parents[k + 1] == i).tolist()

    def level_sizes(self) -> list[int]:
        return [len(x) for x in self.levels]

    def blocks(self, k: int) -> dict[tuple[int, int], int]:
        """Vertex count per index pair ``(m, n)`` on level ``k``."""
        return _block_counts(self.levels[k])

    def __eq__(self, other):
        if not isinstance(other, LeveledTree):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.height == other.height
            and all(np.array_equal(a, b) for a, b in zip(self.levels, other.levels))
            and all(np.array_equal(a, b) for a, b in zip(self.parents, other.parents))
        )


def _to_vertex(kind: str, row) -> FareyVertex | TerminalPair:
    r = [int(x) for x in row]
    if kind == "farey":
        return FareyVertex(ExtendedRational(r[2], r[3]), ExtendedRational(r[4], r[5]), r[0], r[1])
    return TerminalPair(r[0], r[1], r[2], r[3])


def _block_counts(level: np.ndarray) -> dict[tuple[int, int], int]:
    # m + n is constant on a level, so m alone identifies the block
    if not len(level):
        return {}
    total = int(level[0, 0] + level[0, 1])
    counts = np.bincount(level[:, 0], minlength=total + 1)
    return {(m, total - m): int(c) for m, c in enumerate(counts.tolist()) if c}


def level_size(k: int) -> int:
    """Number of vertices on level ``k`` of any of the three trees."""
    ms = np.arange(k + 1, dtype=np.int64)
    ns = k - ms
    mu = L.mobius_table(max(k, 1))
    return int(np.where(ms * ns > 0, L.coprime_counts(ms, ns, mu) + 1, 1).sum())


def _check_height(N: int) -> None:
    if N < 0:
        raise DomainError(f"height must be nonnegative, got {N}")
    if N > L.MAX_HEIGHT:
        raise GuardError(f"height {N} exceeds the supported maximum {L.MAX_HEIGHT}")


# -- building ---------------------------------------------------------------


def _young_from_farey(rows: np.ndarray, k: int, jobs: int) -> tuple[np.ndarray, np.ndarray]:
    """ST image of a Farey level, plus the permutation that sorts it."""
    image = L.suranyi_level_chunked(rows, jobs)
    order = L.canonical_terminal(image, k)
    return image, order


def build_tree(kind: Kind, N: int, *, max_vertices: int = DEFAULT_RESIDENT_BUDGET, jobs: int = 1) -> LeveledTree:
    """Build one of the three trees to height ``N``, fully in memory.

    The Farey tree is grown by the children rule and every child is checked
    to map back to its parent; the terminal tree likewise.  The Young tree
    is the level-wise image of the Farey tree.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown tree kind {kind!r}; choose from {KINDS}")
    _check_height(N)
    total = sum(level_size(k) for k in range(N + 1))
    if total > max_vertices:
        raise GuardError(f"tree of height {N} has {total} vertices, over the budget {max_vertices}")

    levels, parents = [], []
    if kind == "terminal":
        cur = L.ROOT_TERMINAL.copy()
        levels.append(cur)
        parents.append(np.empty(0, np.int64))
        for k in range(1, N + 1):
            nxt, par = L.terminal_children(cur, k - 1)
            up, bad = L.terminal_parents(nxt)
            if bad.any() or not np.array_equal(up, cur[par]):
                raise AssertionError(f"terminal level {k}: children do not map back to their parents")
            levels.append(nxt)
            parents.append(par)
            cur = nxt
        return LeveledTree(kind, N, levels, parents)

    cur = L.ROOT_FAREY.copy()
    levels.append(cur)
    parents.append(np.empty(0, np.int64))
    for k in range(1, N + 1):
        nxt, par = L.farey_children(cur)
        if not np.array_equal(L.farey_parents(nxt, cur), cur[par]):
            raise AssertionError(f"farey level {k}: children do not map back to their parents")
        levels.append(nxt)
        parents.append(par)
        cur = nxt
    if kind == "farey":
        return LeveledTree(kind, N, levels, parents)

    ylevels, yparents = [], []
    prev_rank = None
    for k, (rows, par) in enumerate(zip(levels, parents)):
        image, order = _young_from_farey(rows, k, jobs)
        rank = np.empty_like(order)
        rank[order] = np.arange(len(order))
        ylevels.append(image[order])
        yparents.append(prev_rank[par[order]] if k else np.empty(0, np.int64))
        prev_rank = rank
    return LeveledTree("young", N, ylevels, yparents)


# -- verification -----------------------------------------------------------


@dataclass
class LevelStats:
    level: int
    vertices: int
    blocks: dict[tuple[int, int], int] = field(repr=False)


@dataclass
class VerificationReport:
    height: int
    mode: str
    passed: bool
    checks: list[str]
    levels: list[LevelStats] = field(repr=False)
    counterexample: str | None = None
    elapsed: float = 0.0
    stream: bool = False
    reference_height: int = REFERENCE_HEIGHT

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a report carries a counterexample exactly when it fails")

    @property
    def total_vertices(self) -> int:
        return sum(s.vertices for s in self.levels)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"{status} mode={self.mode} height={self.height} "
            f"vertices={self.total_vertices} checks={len(self.checks)} "
            f"elapsed={self.elapsed:.2f}s memory={'stream' if self.stream else 'resident'} "
            f"previously-checked-height={self.reference_height}"
        )
        if self.counterexample:
            line += f" counterexample: {self.counterexample}"
        return line


class _Failure(Exception):
    pass


def _first_mismatch(label: str, got: np.ndarray, want: np.ndarray, k: int) -> None:
    if got.shape != want.shape:
        raise _Failure(f"level {k} {label}: shapes {got.shape} and {want.shape} differ")
    if np.array_equal(got, want):
        return
    diff = np.flatnonzero(np.any(got != want, axis=1))
    if len(diff):
        i = int(diff[0])
        raise _Failure(f"level {k} {label}: row {i} gives {got[i].tolist()}, expected {want[i].tolist()}")


def _child_counts(label: str, parent: np.ndarray, n_prev: int, k: int) -> None:
    counts = np.bincount(parent, minlength=n_prev)
    bad = np.flatnonzero((counts < 1) | (counts > 2))
    if len(bad):
        i = int(bad[0])
        raise _Failure(f"level {k - 1} {label}: vertex {i} has {counts[i]} children")


def _walk(N: int, modes: set[str], stream: bool, jobs: int, budget: int) -> tuple[list[str], list[LevelStats]]:
    theorem1 = "theorem1" in modes
    iso = "isomorphism" in modes
    mobius = L.mobius_table(N + 2)
    checks: list[str] = []

    def note(name: str) -> None:
        if name not in checks:
            checks.append(name)

    F = L.ROOT_FAREY.copy()
    T = L.ROOT_TERMINAL.copy()
    Y_img, _ = _young_from_farey(F, 0, jobs)
    if not np.array_equal(Y_img, T):
        raise _Failure(f"level 0: root images differ: {Y_img.tolist()} vs {T.tolist()}")
    stats = [LevelStats(0, 1, {(0, 0): 1})]
    retained = 1

    for k in range(1, N + 1):
        size = level_size(k)
        retained = size if stream else retained + size
        if retained > budget:
            raise GuardError(f"level {k} would hold {retained} vertices, over the budget {budget}")

        F_next, F_par = L.farey_children(F)
        note("farey level equals every tagged interval of that level")
        msg = L.check_farey_level(F_next, k, mobius)
        if msg:
            raise _Failure(msg)
        note("farey children map back to their parent")
        V = L.farey_parents(F_next, F)
        _first_mismatch("farey parent", V, F[F_par], k)
        note("every farey vertex above the leaves has one or two children")
        _child_counts("farey", F_par, len(F), k)

        T_next, T_par = L.terminal_children(T, k - 1)
        note("terminal children map back to their parent")
        U, bad = L.terminal_parents(T_next)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise _Failure(f"level {k} terminal: parent map undefined at {T_next[i].tolist()}")
        _first_mismatch("terminal parent", U, T[T_par], k)
        note("every terminal vertex above the leaves has one or two children")
        _child_counts("terminal", T_par, len(T), k)
        note("terminal values lie in [1, mn]")
        mn = T_next[:, 0] * T_next[:, 1]
        if np.any(T_next[:, 2:] < 1) or np.any(T_next[:, 2:] > mn[:, None]):
            raise _Failure(f"level {k}: terminal value out of range")

        Y_next_img, order = _young_from_farey(F_next, k, jobs)
        Y_sorted = Y_next_img[order]
        note("interval-to-pair map is injective on each level")
        keys = L.terminal_key(Y_sorted, k)
        dup = np.flatnonzero(keys[1:] == keys[:-1])
        if len(dup):
            raise _Failure(f"level {k}: two intervals share the image {Y_sorted[dup[0]].tolist()}")
        note("young level set equals terminal level set")
        _first_mismatch("young vs terminal level", Y_sorted, T_next, k)

        if theorem1 or iso:
            # V == F[F_par] was checked above, so the images of the parents
            # are the previous level's images
            parent_image = Y_img[F_par]
            # Y_sorted equals T_next row for row, so its parents are U
            Uy = U
        if theorem1:
            note("young parent (via inverse image) equals terminal parent map")
            # Y_sorted[j] is the image of F_next[order[j]]
            _first_mismatch("phi vs u", parent_image[order], Uy, k)
        if iso:
            note("interval-to-pair map carries the farey parent map to the terminal one")
            pos = np.empty_like(order)
            pos[order] = np.arange(len(order))
            # Y_next_img[i] == Y_sorted[pos[i]], so its parent is Uy[pos[i]]
            _first_mismatch("edge map", parent_image, Uy[pos], k)
            note("interval-to-pair map carries farey tree edges to terminal tree edges")
            _first_mismatch("edge structure", T[T_par[pos]], Y_img[F_par], k)

        stats.append(LevelStats(k, len(F_next), _block_counts(F_next)))
        F, T, Y_img = F_next, T_next, Y_next_img
    return checks, stats


def verify(
    N: int,
    mode: str = "all",
    *,
    stream: bool = False,
    jobs: int = 1,
    max_vertices: int | None = None,
    max_sum: int = 8,
    guard: int = DEFAULT_ENUMERATION_GUARD,
) -> VerificationReport:
    """Run one verification mode up to height ``N``.

    ``all`` covers the level and parent-map checks of ``theorem1`` and
    ``isomorphism`` plus the L-shape enumeration check up to ``max_sum``.
    Failures are reported, never raised; bad arguments still raise.
    """
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}; choose from {MODES}")
    if jobs < 1:
        raise DomainError("jobs must be at least 1")
    if mode == "corollary2":
        return verify_corollary2(max_sum, guard=guard)
    _check_height(N)
    budget = max_vertices or (DEFAULT_STREAM_BUDGET if stream else DEFAULT_RESIDENT_BUDGET)
    modes = {"theorem1", "isomorphism"} if mode == "all" else {mode}
    start = time.perf_counter()
    try:
        checks, stats = _walk(N, modes, stream, jobs, budget)
        failure = None
    except _Failure as exc:
        checks, stats, failure = [], [], str(exc)
    report = VerificationReport(
        N, mode, failure is None, checks, stats, failure, time.perf_counter() - start, stream
    )
    if mode == "all" and report.passed:
        extra = verify_corollary2(max_sum, guard=guard)
        report.checks.extend(extra.checks)
        report.passed = extra.passed
        report.counterexample = extra.counterexample
        report.elapsed = time.perf_counter() - start
    return report


def verify_theorem1(N: int, **kwargs) -> VerificationReport:
    """Young and terminal trees coincide: same level sets, same parent maps."""
    return verify(N, "theorem1", **kwargs)


def verify_isomorphism(N: int, **kwargs) -> VerificationReport:
    """The interval-to-pair map is a level-wise bijection carrying edges to edges."""
    return verify(N, "isomorphism", **kwargs)


def verify_corollary2(max_sum: int, *, guard: int = DEFAULT_ENUMERATION_GUARD) -> VerificationReport:
    """Brute-force L-shapes against Young terminal pairs for all ``m + n <= max_sum``.

    For each size the exhaustively enumerated L-shapes, compressed to their
    terminal pairs, must equal the Young terminal pairs; the L-shapes must
    equal the restrictions of the Young tables; decompression must recover
    each L-shape; and the count must equal the number of Farey gaps of
    ``G(m-1, n-1)``.
    """
    if max_sum > guard:
        raise GuardError(f"max_sum {max_sum} exceeds the enumeration guard {guard}")
    start = time.perf_counter()
    checks = [
        "enumerated L-shapes compress to the young terminal pairs",
        "enumerated L-shapes equal the young table restrictions",
        "decompression recovers every enumerated L-shape",
        "common count equals the number of farey gaps",
    ]
    stats: list[LevelStats] = []
    failure = None
    for total in range(2, max_sum + 1):
        blocks = {}
        for m in range(1, total):
            n = total - m
            shapes = enumerate_E_lshapes(m, n, guard=guard)
            pairs = sorted(s.terminal_pair() for s in shapes)
            young = young_terminal_pairs(m, n)
            gaps = len(farey_intervals(m - 1, n - 1))
            blocks[(m, n)] = len(shapes)
            if pairs != young:
                failure = f"size ({m},{n}): enumerated pairs {pairs} vs young pairs {young}"
            elif len(pairs) != gaps:
                failure = f"size ({m},{n}): {len(pairs)} L-shapes but {gaps} farey gaps"
            else:
                lys = sorted(
                    (suranyi_table(v).lshape() for v in farey_intervals(m - 1, n - 1)),
                    key=lambda s: (s.bottom, s.left),
                )
                if lys != shapes:
                    failure = f"size ({m},{n}): young restrictions differ from enumerated L-shapes"
                else:
                    for s in shapes:
                        if decompress(s.terminal_pair()) != s:
                            failure = f"size ({m},{n}): decompression of {s.terminal_pair()} differs from {s}"
                            break
            if failure:
                break
        stats.append(LevelStats(total, sum(blocks.values()), blocks))
        if failure:
            break
    # for this mode the height is the bound on m + n
    return VerificationReport(
        max_sum, "corollary2", failure is None, checks, stats, failure, time.perf_counter() - start
    )


# -- export -----------------------------------------------------------------


def _payload(kind: str, row) -> dict:
    return _to_vertex(kind, row).to_json()


def export(tree: LeveledTree, fmt: Literal["json", "dot"] = "json") -> bytes:
    """Deterministic serialization of a tree."""
    if fmt == "json":
        return _export_json(tree).encode()
    if fmt == "dot":
        return _export_dot(tree).encode()
    raise DomainError(f"unknown export format {fmt!r}")


def _export_json(tree: LeveledTree) -> str:
    levels = []
    for k, rows in enumerate(tree.levels):
        verts = []
        for i, row in enumerate(rows):
            parent = None if k == 0 else int(tree.parents[k][i])
            verts.append({"id": i, "parent": parent, "payload": _payload(tree.kind, row)})
        levels.append({"level": k, "vertices": verts})
    doc = {"kind": tree.kind, "height": tree.height, "levels": levels}
    return json.dumps(doc, separators=(",", ":"))


def _dot_label(kind: str, row) -> str:
    v = _to_vertex(kind, row)
    if kind == "farey":
        return f"({v.a},{v.b})|{v.m},{v.n}"
    return f"{v.s},{v.t}|{v.m},{v.n}"


def _export_dot(tree: LeveledTree) -> str:
    out = io.StringIO()
    out.write(f"digraph {tree.kind} {{\n")
    for k, rows in enumerate(tree.levels):
        for i, row in enumerate(rows):
            out.write(f'  "{k}_{i}" [label="{_dot_label(tree.kind, row)}"];\n')
    for k in range(1, len(tree.levels)):
        for i, p in enumerate(tree.parents[k]):
            out.write(f'  "{k - 1}_{int(p)}" -> "{k}_{i}";\n')
    out.write("}\n")
    return out.getvalue()


def load_json(data: bytes | str) -> LeveledTree:
    """Inverse of ``export(tree, "json")``."""
    doc = json.loads(data)
    kind = doc["kind"]
    if kind not in KINDS:
        raise DomainError(f"unknown tree kind {kind!r}")
    levels, parents = [], []
    for entry in doc["levels"]:
        rows, par = [], []
        for vert in sorted(entry["vertices"], key=lambda v: v["id"]):
            p = vert["payload"]
            if kind == "farey":
                v = FareyVertex.from_json(p)
                rows.append((v.m, v.n, v.a.num, v.a.den, v.b.num, v.b.den))
            else:
                rows.append((p["m"], p["n"], p["s"], p["t"]))
            if vert["parent"] is not None:
                par.append(vert["parent"])
        width = 6 if kind == "farey" else 4
        levels.append(np.array(rows, dtype=np.int64).reshape(-1, width))
        parents.append(np.array(par, dtype=np.int64))
    return LeveledTree(kind, int(doc["height"]), levels, parents)


def iter_vertices(tree: LeveledTree) -> Iterator[tuple[int, int, FareyVertex | TerminalPair]]:
    for k, rows in enumerate(tree.levels):
        for i, row in enumerate(rows):
            yield k, i, _to_vertex(tree.kind, row)
