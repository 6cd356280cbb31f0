"""Weak order on symmetric-subgroup orbit closures.

The vertices of the weak order graph are the orbit indices of a
symmetric space (clans, or bare involutions in cases AI and AII), and
an edge beta -> gamma labeled by a simple generator records that the
bigger orbit closure is obtained from the smaller one by sweeping with
a minimal parabolic.  Edges project through psi onto one-step Demazure
conjugations of twisted involutions, and some edges are doubled: the
sweep is then a degree two cover, which is what produces multiplicity
coefficients 2^d in character formulas.

Breadth-first search along edges from the dense vertex yields, for
every orbit index gamma, the atom set W(gamma) of Weyl group elements
s_m...s_1 realized by paths, together with the count d_gamma(w) of
doubled edges along a path realizing w.
"""

from __future__ import annotations

import json
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from . import clans
from . import coxeter as cx
from .clans import Clan, GammaIndex, SymSpace

MATCHLESS_CASES = ("AI", "AII")


# ---------------------------------------------------------------------------
# cycles, supports, and the sign-carrying sets of a twisted involution

def cycle_set(w: cx.WeylElement) -> frozenset[tuple[int, ...]]:
    """The nontrivial cycles of w acting on its natural domain, as
    sorted tuples; signed kinds act on [-n..-1, 1..n]."""
    domain = _domain(w)
    seen: set[int] = set()
    out = []
    for start in domain:
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        j = w(start)
        while j != start:
            orbit.append(j)
            seen.add(j)
            j = w(j)
        if len(orbit) > 1:
            out.append(tuple(sorted(orbit)))
    return frozenset(out)


def support(w: cx.WeylElement) -> frozenset[int]:
    """All domain points moved by w."""
    return frozenset(i for i in _domain(w) if w(i) != i)


def _domain(w: cx.WeylElement) -> tuple[int, ...]:
    m = len(w.oneline)
    if w.kind == "A":
        return tuple(range(1, m + 1))
    return tuple(i for i in range(-m, m + 1) if i)


@dataclass(frozen=True)
class ThetaSets:
    """The matching and the sign-point set that every clan over a given
    twisted involution must carry."""

    cbar: frozenset[tuple[int, ...]]
    sset: frozenset[int]


def theta_sets(space: SymSpace, z: cx.WeylElement, strict: bool = True) -> ThetaSets:
    """The forced matching cbar(z) and sign-point set S(z).

    Every orbit index gamma with psi(gamma) = z has M(gamma) = cbar(z)
    and S+(gamma) | S-(gamma) = S(z).  With strict=True (the default), z
    must lie in the image of psi; strict=False only requires a twisted
    involution of the right kind.
    """
    case, n = space.case, space.n
    if case in MATCHLESS_CASES:
        raise ValueError(f"{case} orbit indices carry no sign structure")
    if strict:
        if not clans.in_rs_image(space, z):
            raise ValueError(f"{z!r} is not an orbit image for {space!r}")
    elif z.kind != space.kind or z.rank != n or not cx.is_twisted_involution(
        space.theta, z
    ):
        raise ValueError(f"{z!r} is not a twisted involution for {space!r}")

    if case == "AIII":
        u = cx.compose(cx.longest_element("A", n), z)
        sset = frozenset(i for i in range(1, n + 2) if z(i) == n + 2 - i)
        return ThetaSets(cycle_set(u), sset)

    zb = cx.as_kind(z, "BC") if z.kind == "D" else z
    w0 = cx.as_kind(cx.longest_element(space.kind, n), "BC")
    if (case == "DI" and n % 2 == 1) or (case == "DII" and n % 2 == 0):
        u = cx.compose(w0, clans.left_t0(zb))
    else:
        u = cx.compose(w0, zb)
    if case in ("DII", "DIV"):
        t0z = clans.left_t0(zb)
        sset = frozenset(i for i in _domain(zb) if t0z(i) == -i)
    else:
        sset = frozenset(i for i in _domain(zb) if zb(i) == -i)
    if case == "BI":
        sset |= {0}
    return ThetaSets(cycle_set(u), sset)


# ---------------------------------------------------------------------------
# the weak order graph

@dataclass(frozen=True)
class Edge:
    """A single-generator weak order edge source -> target."""

    source: GammaIndex
    gen: int
    target: GammaIndex
    doubled: bool


@dataclass(frozen=True)
class OrbitGraph:
    """The full weak order graph of a symmetric space, with the dense
    orbit index as its unique source vertex."""

    space: SymSpace
    vertices: tuple[GammaIndex, ...]
    edges: tuple[Edge, ...]


def edge_doubled(space: SymSpace, z: cx.WeylElement, i: int) -> bool:
    """Whether an edge labeled t_i out of a vertex with psi-image z is
    doubled.  Depends only on z and i, so every lift of the same
    one-step move shares the flag."""
    case = space.case
    if case in ("AI", "BI", "CI", "DI") and i != 0:
        return {abs(i), abs(i) + 1} <= cx.fix_set(z)
    if case == "DII":
        t0z = clans.left_t0(cx.as_kind(z, "BC"))
        return {abs(i), abs(i) + 1} <= cx.fix_set(t0z)
    if case == "BI" and i == 0:
        return 1 in cx.fix_set(z)
    return False


def _sign_bijection_ok(s: cx.WeylElement, beta: Clan, gamma: Clan) -> bool:
    """Condition on edges that keep the matching: the generator must
    carry each sign set of beta onto the same sign set of gamma.  The
    induced identification is the sorted pairing; pointwise the
    generator can reverse the order of two transported points, but only
    at the fork generator of kind D, where the transport is still the
    unique edge producing the target."""

    def move(x: int) -> int:
        return 0 if x == 0 else s(x)

    return all(
        frozenset(move(x) for x in src) == dst
        for src, dst in ((beta.plus, gamma.plus), (beta.minus, gamma.minus))
    )


def _matched_pair_ok(
    space: SymSpace, cs: frozenset, i: int, beta: Clan, gamma: Clan
) -> bool:
    """Condition on edges that dissolve a matched generator cycle: the
    old signs embed into gamma and the freed points get opposite
    signs."""
    if gamma.matching != beta.matching - cs:
        return False
    if space.case == "BI" and i == 0:
        beta = clans.toggle(beta, {0})
    if not (beta.plus <= gamma.plus and beta.minus <= gamma.minus):
        return False
    pair = {i, abs(i) + 1}
    return not (pair <= gamma.plus or pair <= gamma.minus)


def _scan_source(
    space: SymSpace,
    beta: GammaIndex,
    z: cx.WeylElement,
    by_z: dict,
    gens: tuple[int, ...],
) -> list[Edge]:
    matchless = space.case in MATCHLESS_CASES
    kind, n = space.kind, space.n
    out = []
    for i in gens:
        z2 = cx.demazure_conjugate(space.theta, z, i)
        if z2 == z:
            continue
        doubled = edge_doubled(space, z, i)
        s = cx.simple(kind, n, i)
        cs = cycle_set(s)
        for gamma in by_z.get(z2, ()):
            if matchless:
                ok = True
            elif cs <= beta.matching:
                ok = _matched_pair_ok(space, cs, i, beta, gamma)
            else:
                ok = _sign_bijection_ok(s, beta, gamma)
            if ok:
                out.append(Edge(beta, i, gamma, doubled))
    return out


@lru_cache(maxsize=None)
def build_graph(space: SymSpace) -> OrbitGraph:
    """The weak order graph: for every vertex beta and generator t_i
    whose Demazure conjugation moves psi(beta), each candidate gamma
    over the conjugated involution is tested for the sign-transport or
    matched-pair condition."""
    vertices = tuple(clans.enumerate_clans(space))
    gens = cx.generator_indices(space.kind, space.n)
    psi = {v: clans.rs_map(space, v) for v in vertices}
    by_z: dict[cx.WeylElement, list[GammaIndex]] = {}
    for v in vertices:
        by_z.setdefault(psi[v], []).append(v)

    def scan(v: GammaIndex) -> list[Edge]:
        return _scan_source(space, v, psi[v], by_z, gens)

    threads = int(os.environ.get("BRION_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(scan, vertices))
    else:
        batches = [scan(v) for v in vertices]

    edges = tuple(e for batch in batches for e in batch)
    seen: dict[tuple, GammaIndex] = {}
    for e in edges:
        key = (e.target, e.gen)
        if key in seen and seen[key] != e.source:
            raise ValueError(f"two sources for {key}: {seen[key]!r}, {e.source!r}")
        seen[key] = e.source
    return OrbitGraph(space, vertices, edges)


@lru_cache(maxsize=None)
def _in_edges(graph: OrbitGraph) -> dict:
    out: dict[GammaIndex, list[Edge]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        out[e.target].append(e)
    return out


def monoid_act(space: SymSpace, s: int, gamma: GammaIndex) -> GammaIndex:
    """The action t_i . gamma = beta when beta -> gamma is an edge
    labeled t_i, and gamma itself when no such edge exists."""
    graph = build_graph(space)
    for e in _in_edges(graph)[gamma]:
        if e.gen == s:
            return e.source
    return gamma


def atoms_bfs(space: SymSpace) -> dict:
    """Atom sets from the graph: maps every vertex gamma to a pair
    (W(gamma), d) where W(gamma) is the set of Weyl group elements
    realized as s_m...s_1 by paths from the dense vertex, and d maps
    each atom to its count of doubled path edges."""
    graph = build_graph(space)
    dense = clans.dense_clan(space)
    dist = {dense: 0}
    queue = deque([dense])
    out_edges: dict[GammaIndex, list[Edge]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        out_edges[e.source].append(e)
    while queue:
        beta = queue.popleft()
        for e in out_edges[beta]:
            if e.target not in dist:
                dist[e.target] = dist[beta] + 1
                queue.append(e.target)
    if len(dist) != len(graph.vertices):
        missing = [v for v in graph.vertices if v not in dist]
        raise ValueError(f"vertices unreachable from the dense index: {missing!r}")
    for e in graph.edges:
        if dist[e.target] != dist[e.source] + 1:
            raise ValueError(f"edge {e!r} skips a level")

    d_maps: dict[GammaIndex, dict[cx.WeylElement, int]] = {
        dense: {cx.identity(space.kind, space.n): 0}
    }
    position = {v: j for j, v in enumerate(graph.vertices)}
    for gamma in sorted(dist, key=lambda v: (dist[v], position[v])):
        if gamma == dense:
            continue
        acc: dict[cx.WeylElement, int] = {}
        for e in _in_edges(graph)[gamma]:
            for w, d in d_maps[e.source].items():
                w2 = cx.mult_left(e.gen, w)
                d2 = d + int(e.doubled)
                if acc.setdefault(w2, d2) != d2:
                    raise ValueError(
                        f"conflicting doubled counts for atom {w2!r} of {gamma!r}"
                    )
        d_maps[gamma] = acc
    return {g: (frozenset(m), m) for g, m in d_maps.items()}


# ---------------------------------------------------------------------------
# paths, their set partitions, and lifting

@dataclass(frozen=True)
class PathRecord:
    """A path in the involution projection of the weak order graph,
    rooted at the dense image; clans is the lifted vertex sequence when
    one has been chosen, else empty."""

    word: tuple[int, ...]
    clans: tuple[GammaIndex, ...]
    doubled_count: int
    z_sequence: tuple[cx.WeylElement, ...]


def path_from_word(space: SymSpace, word: Iterable[int]) -> PathRecord:
    """Walk the generator word from the dense image, one Demazure
    conjugation per letter; every step must move."""
    word = tuple(word)
    z = clans.dense_image(space)
    zs = [z]
    doubled = 0
    for i in word:
        z2 = cx.demazure_conjugate(space.theta, z, i)
        if z2 == z:
            raise ValueError(f"stationary step t_{i} at {z!r}")
        doubled += int(edge_doubled(space, z, i))
        zs.append(z2)
        z = z2
    return PathRecord(word, (), doubled, tuple(zs))


def _lambda_components(space: SymSpace, path: PathRecord) -> list[list[frozenset]]:
    """The per-step block families Lambda_0, Lambda_1, ..., Lambda_m:
    step i contributes the generator cycles pushed forward through the
    tail of the path when they dissolve matched blocks, and step 0 the
    singleton sign points of the dense image."""
    if space.case in MATCHLESS_CASES:
        raise ValueError(f"{space.case} paths have no sign-block partition")
    if path.z_sequence[0] != clans.dense_image(space):
        raise ValueError("path must start at the dense image")
    kind, n = space.kind, space.n
    m = len(path.word)

    tails = [cx.identity(kind, n)]  # tails[j] = s_m ... s_{m-j+1}
    for i in reversed(path.word):
        tails.append(cx.compose(tails[-1], cx.simple(kind, n, i)))
    # the product s_m...s_{i+1} skips the first i letters
    tail_after = {i: tails[m - i] for i in range(m + 1)}

    def move(v: cx.WeylElement, x: int) -> int:
        return 0 if x == 0 else v(x)

    w_full = tail_after[0]
    components = [
        [frozenset({move(w_full, a)}) for a in theta_sets(space, path.z_sequence[0]).sset]
    ]
    for idx in range(1, m + 1):
        i = path.word[idx - 1]
        cs = cycle_set(cx.simple(kind, n, i))
        if cs <= theta_sets(space, path.z_sequence[idx - 1]).cbar:
            v = tail_after[idx]
            components.append([frozenset(v(a) for a in blk) for blk in cs])
        else:
            components.append([])
    return components


def lambda_partition(space: SymSpace, path: PathRecord) -> frozenset[frozenset]:
    """The set partition carried by a path: the union of the dissolved
    blocks of every step.  For spaces with a zero base point, trivial
    blocks {-a, a} merge with {0} into a single block."""
    components = _lambda_components(space, path)
    blocks = [blk for comp in components[1:] for blk in comp]
    if space.case == "BI":
        trivial = [b for b in blocks if len(b) == 2 and sum(b) == 0]
        merged = frozenset(x for b in trivial for x in b) | {0}
        blocks = [b for b in blocks if b not in trivial] + [merged]
    return frozenset(blocks)


def lift_check(space: SymSpace, path: PathRecord, gamma: Clan) -> bool:
    """Whether the path lifts to a weak order path from the dense index
    to gamma: between consecutive elements of every partition block,
    gamma must show one plus sign and one minus sign."""
    if clans.rs_map(space, gamma) != path.z_sequence[-1]:
        raise ValueError("path does not end at the image of gamma")
    for block in lambda_partition(space, path):
        elems = sorted(block)
        for a, b in zip(elems, elems[1:]):
            if len({a, b} & gamma.plus) != 1 or len({a, b} & gamma.minus) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# exports

def vertex_label(gamma: GammaIndex) -> str:
    if isinstance(gamma, Clan):
        return clans.one_line_str(gamma)
    return "(" + ",".join(str(v) for v in gamma.oneline) + ")"


def graph_to_dot(graph: OrbitGraph) -> str:
    """Graphviz rendering; doubled edges are bold with label 2."""
    lines = ["digraph weak_order {", '  rankdir="TB";']
    for v in graph.vertices:
        lines.append(f'  "{vertex_label(v)}";')
    for e in graph.edges:
        attrs = f'label="t{e.gen}"'
        if e.doubled:
            attrs = f'style=bold,label=2,comment="t{e.gen}"'
        lines.append(f'  "{vertex_label(e.source)}" -> "{vertex_label(e.target)}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def atoms_to_json(space: SymSpace) -> str:
    """The full atom map as deterministic JSON rows."""
    data = atoms_bfs(space)
    rows = []
    for gamma in build_graph(space).vertices:
        atoms, d = data[gamma]
        rows.append(
            {
                "gamma": vertex_label(gamma),
                "z": list(clans.rs_map(space, gamma).oneline),
                "atoms": [
                    {"oneline": list(w.oneline), "d": d[w]}
                    for w in sorted(atoms, key=lambda u: (cx.length(u), u.oneline))
                ],
            }
        )
    return json.dumps(rows, indent=2) + "\n"
