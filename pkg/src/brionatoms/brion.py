"""Closed-form atom sets for the ten classical symmetric spaces.

The graph walk in weak_order produces the atom set of an orbit index one
edge at a time.  This module computes the same sets in closed form:
minimal-length twisted conjugators E_theta(y, z), the per-case extended
atom sets grown from a named base element, shape operators reading a
matching off an atom's one-line representation, admissible and aligned
matchings, bottom generators whose up-sets under a word order carve the
extended set into cells, the multiplicity statistic d_z, the rank-shift
embeddings between the D cases, and closed-form classification
predicates (multiplicity-free, uniform, alternating).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import coxeter as cx
from . import weak_order as wo
from . import words
from .clans import (
    Clan,
    GammaIndex,
    SymSpace,
    dense_image,
    in_rs_image,
    left_t0,
    rs_map,
)
from .matchings import (
    SignedMatching,
    enumerate_ncsp,
    from_half_blocks,
    is_gamma_aligned,
    matching_to_json,
    triv,
    triv_set,
)

EMPTY_MATCHING = SignedMatching((), frozenset())


# ---------------------------------------------------------------------------
# minimal-length twisted conjugators

def e_theta(
    theta: str, y: cx.WeylElement, z: cx.WeylElement
) -> frozenset[cx.WeylElement]:
    """All w of minimal length with theta(w) o y o w^{-1} = z.

    Here o is the Demazure product and the minimal length is the
    difference of the minimal atom lengths of z and y.  The result is
    empty when z cannot be reached from y by strictly moving
    conjugations.
    """
    if (y.kind, y.rank) != (z.kind, z.rank):
        raise ValueError(f"{y!r} and {z!r} live in different groups")
    for v in (y, z):
        if not cx.is_twisted_involution(theta, v):
            raise ValueError(f"{v!r} is not a {theta}-twisted involution")
    return _conjugation_table(theta, y).get(z, frozenset())


@lru_cache(maxsize=None)
def _conjugation_table(
    theta: str, y: cx.WeylElement
) -> dict[cx.WeylElement, frozenset[cx.WeylElement]]:
    """Minimal conjugators from y to every reachable twisted involution.

    Breadth-first search on twisted involutions: a strictly moving
    conjugation raises the minimal conjugator length by exactly one, so
    the minimal elements for the target are the length-increasing left
    extensions of the minimal elements for the sources.
    """
    gens = cx.generator_indices(y.kind, y.rank)
    table = {y: frozenset({cx.identity(y.kind, y.rank)})}
    level = dict(table)
    while level:
        grown: dict[cx.WeylElement, set[cx.WeylElement]] = {}
        for v, conjugators in level.items():
            for i in gens:
                target = cx.demazure_conjugate(theta, v, i)
                if target == v:
                    continue
                bucket = grown.setdefault(target, set())
                for w in conjugators:
                    longer = cx.mult_left(i, w)
                    if cx.length(longer) == cx.length(w) + 1:
                        bucket.add(longer)
        level = {v: frozenset(ws) for v, ws in grown.items() if ws}
        table.update(level)
    return table


def base_point(space: SymSpace) -> tuple[str, cx.WeylElement]:
    """The automorphism and base element generating the extended atoms.

    The base element is the image of the dense orbit index, so the
    extended atom set of z consists of the minimal conjugators from the
    dense image to z.
    """
    return space.theta, dense_image(space)


def extended_atoms(space: SymSpace, z: cx.WeylElement) -> frozenset[cx.WeylElement]:
    """The extended atom set of an orbit image z."""
    if not in_rs_image(space, z):
        raise ValueError(f"{z!r} is not an orbit image for {space!r}")
    theta, y = base_point(space)
    atoms = _conjugation_table(theta, y).get(z, frozenset())
    if not atoms:
        raise ValueError(f"no atoms found for {z!r} in {space!r}")
    return atoms


# ---------------------------------------------------------------------------
# shape operators

def _check_element(space: SymSpace, w: cx.WeylElement) -> None:
    if w.kind != space.kind or w.rank != space.n:
        raise ValueError(f"{w!r} does not lie in the Weyl group of {space!r}")


def shape(space: SymSpace, w: cx.WeylElement) -> SignedMatching:
    """The matching read off the one-line representation of an atom.

    Raises ValueError when the extracted blocks do not assemble into a
    noncrossing symmetric matching, which happens only for elements
    outside the extended atom sets.
    """
    _check_element(space, w)
    case, line = space.case, w.oneline
    if case in ("AI", "AII"):
        return EMPTY_MATCHING
    half: list[tuple[int, int]] = []
    if case == "AIII":
        j = min(space.p, space.q)
        firsts, middles = line[:j], line[j : j + space.k]
        for i in range(j):
            a, b = line[-1 - i], firsts[i]
            if a < b:
                half.append((a, b))
        half += [(-c, c) for c in middles]
    elif case in ("BI", "CI"):
        k = space.k if case == "BI" else 0
        ndes, nres = words.nested_descents(line[k:])
        half += [(a, -b) for a, b in ndes if 0 < a < -b]
        half += [(a, -a) for a in nres if a < 0]
        half += [(-abs(a), abs(a)) for a in line[:k]]
    elif case == "CII":
        k = space.k
        half += [(-abs(a), abs(a)) for a in line[:k]]
        for i in range(k, len(line) - 1, 2):
            b, c = line[i], line[i + 1]
            if 0 < c < -b:
                half.append((c, -b))
    elif case in ("DI", "DII"):
        ndes, _ = words.nested_descents(line[space.k :])
        half += [(abs(a), -b) for a, b in ndes if abs(a) < -b]
        half += [(-abs(a), abs(a)) for a in line[: space.k]]
    else:  # DIII and DIV pair off the letters after an odd-rank header
        start = space.n % 2
        if start:
            half.append((-abs(line[0]), abs(line[0])))
        for i in range(start, len(line) - 1, 2):
            b, c = line[i], line[i + 1]
            if b < 0 < c < -b:
                half.append((c, -b))
            elif b < c < 0 < -b:
                half += [(b, -b), (c, -c)]
    support = sorted({abs(x) for block in half for x in block})
    try:
        return from_half_blocks(support, half)
    except ValueError as exc:
        raise ValueError(f"malformed block structure in {w!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# admissible and aligned matchings

def _underlying(space: SymSpace, z: cx.WeylElement) -> cx.WeylElement:
    """The signed involution driving the shared cycle combinatorics;
    the two cases with the diamond twist transfer through t_0."""
    if space.case in ("DII", "DIV"):
        return left_t0(z)
    return z


def matchings_for(space: SymSpace, z: cx.WeylElement) -> list[SignedMatching]:
    """The admissible matchings of an orbit image z."""
    if not in_rs_image(space, z):
        raise ValueError(f"{z!r} is not an orbit image for {space!r}")
    case = space.case
    if case in ("AI", "AII"):
        return [EMPTY_MATCHING]
    if case == "AIII":
        return enumerate_ncsp(sorted(cx.twist_set(z)), triv_eq=space.k)
    support = sorted(cx.negate_set(_underlying(space, z)))
    if case == "BI":
        return enumerate_ncsp(support, triv_ge=space.k)
    if case == "CI":
        return enumerate_ncsp(support)
    if case in ("CII", "DI", "DII"):
        return enumerate_ncsp(support, triv_eq=space.k)
    if case == "DIII":
        residue = cx.ell0(z) % 4
        return [m for m in enumerate_ncsp(support) if triv(m) % 4 == residue]
    return [m for m in enumerate_ncsp(support) if triv(m) % 2 == 1]  # DIV


def aligned_matchings(space: SymSpace, gamma: GammaIndex) -> list[SignedMatching]:
    """The admissible matchings aligned with an orbit index."""
    z = rs_map(space, gamma)
    pool = matchings_for(space, z)
    if space.case in ("AI", "AII"):
        return pool
    out = [m for m in pool if is_gamma_aligned(m, gamma)]
    if space.case == "BI":
        k = space.k

        def alternates(m: SignedMatching) -> bool:
            chain = [gamma.sign(0)] + [gamma.sign(i) for i in triv_set(m)]
            return all(
                chain[i] != chain[i + 1] for i in range(len(chain) - 1 - k)
            )

        out = [m for m in out if alternates(m)]
    if space.case in ("DIII", "DIV"):

        def paired(m: SignedMatching) -> bool:
            ts = triv_set(m)
            return all(
                gamma.sign(ts[2 * i]) == gamma.sign(ts[2 * i + 1])
                for i in range(len(ts) // 2)
            )

        out = [m for m in out if paired(m)]
    return out


# ---------------------------------------------------------------------------
# bottom generators and word orders

def generator_bot(
    space: SymSpace, z: cx.WeylElement, matching: SignedMatching
) -> cx.WeylElement:
    """The minimal atom of the cell of an admissible matching."""
    if matching not in matchings_for(space, z):
        raise ValueError(f"{matching!r} is not admissible for {z!r} in {space!r}")
    case = space.case
    if case == "AI":
        return cx.WeylElement("A", words.assemble(words.cyc_sets(z), "des"))
    if case == "AII":
        return cx.WeylElement("A", words.assemble(words.cyc_sets(z), "asc"))
    if case == "AIII":
        pairs = sorted(words.twisted_cyc_sets(z, matching), key=lambda ab: ab[1])
        firsts = tuple(b for _, b in pairs)
        lasts = tuple(a for a, _ in reversed(pairs))
        return cx.WeylElement("A", firsts + triv_set(matching) + lasts)
    inner = _underlying(space, z)
    trivs = triv_set(matching)
    if case == "BI":
        k = space.k
        descending = tuple(reversed(trivs))
        u = tuple(reversed(descending[:k])) + tuple(-c for c in descending[k:])
        v = words.assemble(words.cyc_sets(inner, matching), "des")
        return cx.WeylElement("BC", u + v)
    if case == "CI":
        u = tuple(-c for c in reversed(trivs))
        v = words.assemble(words.cyc_sets(inner, matching), "des")
        return cx.WeylElement("BC", u + v)
    if case == "CII":
        v = words.assemble(words.cyc_sets(inner, matching), "asc")
        return cx.WeylElement("BC", trivs + v)
    if case in ("DI", "DII"):
        v = words.assemble(words.cyc_sets(inner, matching), "des")
        return cx.WeylElement("D", cx.es_normalize(trivs + v))
    # DIII and DIV
    u = tuple(-c for c in reversed(trivs))
    v = words.assemble(words.cyc_sets(inner, matching), "asc")
    if case == "DIII":
        return cx.WeylElement("D", u + v)
    return cx.WeylElement("D", cx.es_normalize(u + v))


def space_order(space: SymSpace) -> words.WordOrder:
    """The word order whose up-sets carve the extended atoms into cells."""
    case = space.case
    if case in ("AI", "CI"):
        return words.WordOrder("precsim", 0)
    if case == "BI":
        return words.WordOrder("precsim", space.k)
    if case == "AII":
        return words.WordOrder("precapprox", 0)
    if case == "CII":
        return words.WordOrder("precapprox", space.k)
    if case == "AIII":
        return words.WordOrder("prec_aiii", space.k)
    if case in ("DI", "DII"):
        return words.WordOrder("precsim_di", space.k)
    if case == "DIII":
        return words.WordOrder("precapprox", 0)
    return words.WordOrder("precapprox", 1)  # DIV


def cell_rank(space: SymSpace, w: cx.WeylElement):
    """The rank of an atom in the graded order of its cell.

    An integer except in the even-signed cases, where whole cells can
    sit at a half-integer offset; covering steps raise the value by
    exactly 1 either way."""
    _check_element(space, w)
    case, line = space.case, w.oneline
    if case in ("AI", "CI"):
        return _descent_rank(line)
    if case == "BI":
        return _descent_rank(line[space.k :])
    if case == "AIII":
        return words.word_inversions(line[: min(space.p, space.q)])
    if case in ("DI", "DII"):
        return words.rank_d(line, space.k)
    k = {"AII": 0, "CII": space.k, "DIII": 0, "DIV": 1}[case]
    return words.word_inversions(line[k + 1 :: 2])


def _descent_rank(line: tuple[int, ...]) -> int:
    """Inversions of the non-descent subword minus those of the nested
    descent bottoms; the rank function of the basic word order."""
    ndes, _ = words.nested_descents(line)
    bottoms = {b for _, b in ndes}
    w_r = tuple(a for a in line if a in bottoms)
    w_l = tuple(a for a in line if a not in bottoms)
    return words.word_inversions(w_l) - words.word_inversions(w_r)


# ---------------------------------------------------------------------------
# the decomposition

@dataclass(frozen=True)
class AtomDecomposition:
    """Closed-form atom decomposition of one orbit image.

    cells maps every admissible matching to the atoms of its cell, an
    up-set of the bottom generator in the space's word order; aligned
    lists the matchings whose cells assemble the atom set of the given
    orbit index; dz assigns every extended atom its multiplicity."""

    z: cx.WeylElement
    cells: dict
    aligned: tuple[SignedMatching, ...]
    dz: dict

    def atoms(self) -> frozenset[cx.WeylElement]:
        """Atom set of the orbit index: the union of the aligned cells."""
        out: set[cx.WeylElement] = set()
        for m in self.aligned:
            out |= self.cells[m]
        return frozenset(out)

    def extended(self) -> frozenset[cx.WeylElement]:
        """Union of all cells, the extended atom set of z."""
        out: set[cx.WeylElement] = set()
        for atoms in self.cells.values():
            out |= atoms
        return frozenset(out)


@lru_cache(maxsize=None)
def _group_lines(kind: str, rank: int) -> frozenset[tuple[int, ...]]:
    return frozenset(w.oneline for w in cx.elements(kind, rank))


def atoms_closed(space: SymSpace, gamma: GammaIndex) -> AtomDecomposition:
    """The cell decomposition of the extended atoms of psi(gamma).

    Each cell is computed as the full up-set of its bottom generator
    inside the Weyl group; that the cells are disjoint and exhaust the
    extended atom set is verified at runtime.
    """
    z = rs_map(space, gamma)
    extended = extended_atoms(space, z)
    order = space_order(space)
    universe = _group_lines(space.kind, space.n)
    cells = {}
    for m in matchings_for(space, z):
        bot = generator_bot(space, z, m)
        lines = words.up_set(order, bot.oneline, universe)
        cells[m] = frozenset(cx.WeylElement(space.kind, line) for line in lines)
    counted = sum(len(atoms) for atoms in cells.values())
    combined = frozenset().union(*cells.values()) if cells else frozenset()
    if counted != len(combined) or combined != extended:
        raise ValueError(f"cells do not decompose the atoms of {z!r} in {space!r}")
    aligned = tuple(aligned_matchings(space, gamma))
    dz = {w: d_z(space, z, w) for w in extended}
    return AtomDecomposition(z, cells, aligned, dz)


def d_z(space: SymSpace, z: cx.WeylElement, w: cx.WeylElement) -> int:
    """The multiplicity statistic of an extended atom."""
    if w not in extended_atoms(space, z):
        raise ValueError(f"{w!r} is not an extended atom of {z!r} in {space!r}")
    case = space.case
    if case in ("AII", "AIII", "CII", "DIII", "DIV"):
        return 0
    if case == "AI":
        return sum(1 for i, v in enumerate(z.oneline, start=1) if v < i)
    if case == "BI":
        excedances = sum(1 for i, v in enumerate(z.oneline, start=1) if 0 < v < i)
        return excedances + cx.ell0(w)
    if case == "CI":
        excedances = sum(1 for i, v in enumerate(z.oneline, start=1) if v < i)
        value = excedances - cx.ell0(w)
    else:  # DI and DII
        inner = _underlying(space, z)
        doubled = sum(
            1 for i in range(-space.n, space.n + 1) if i and inner(i) < i
        )
        if (doubled - space.k) % 2:
            raise ValueError(f"odd multiplicity excess for {z!r} in {space!r}")
        value = (doubled - space.k) // 2
    if value < 0:
        raise ValueError(f"negative multiplicity for {w!r} over {z!r}")
    return value


# ---------------------------------------------------------------------------
# embeddings between the D cases

def embed_di(w: cx.WeylElement, k: int) -> cx.WeylElement:
    """Self-inverse twist of an even-signed permutation negating
    alternate letters among the first k; carries the rank-k atoms of z
    onto the atoms of z whose first k letters form the even-signed
    increasing chain."""
    if w.kind != "D":
        raise ValueError("the embedding acts on even-signed permutations")
    if not 0 <= k <= w.rank:
        raise ValueError(f"need 0 <= k <= {w.rank}, got {k}")
    line = list(w.oneline)
    for j in range(2, k + 1):
        if j % 2 == k % 2:
            line[j - 1] = -line[j - 1]
    if k % 4 in (2, 3):
        line[0] = -line[0]
    return cx.WeylElement("D", tuple(line))


def embed_di_image_chain(w: cx.WeylElement, k: int) -> bool:
    """Whether |w_1| < -w_2 < w_3 < ... alternating to -w_k holds, the
    image condition of the rank-k twist."""
    if k <= 1:
        return True
    line = w.oneline
    chain = [abs(line[0])]
    chain += [(-1) ** (k + j - 1) * line[j - 1] for j in range(2, k + 1)]
    return all(a < b for a, b in zip(chain, chain[1:]))


def embed_dii(w: cx.WeylElement, k: int) -> cx.WeylElement:
    """Insert the new largest value after position k, carrying the
    diamond-twisted rank-k atoms into the rank-(k+1) atoms one rank up."""
    if w.kind != "D":
        raise ValueError("the embedding acts on even-signed permutations")
    if not 0 <= k <= w.rank:
        raise ValueError(f"need 0 <= k <= {w.rank}, got {k}")
    line = w.oneline
    return cx.WeylElement("D", line[:k] + (len(line) + 1,) + line[k:])


def embed_diii(w: cx.WeylElement) -> cx.WeylElement:
    """Swap the letters in each consecutive pair; carries the
    fixed-point-free atoms onto the atoms descending at odd positions."""
    if w.kind != "D" or w.rank % 2:
        raise ValueError("the pair swap needs even-signed even rank")
    line = w.oneline
    out: list[int] = []
    for i in range(0, len(line), 2):
        out += [line[i + 1], line[i]]
    return cx.WeylElement("D", tuple(out))


def embed_div(w: cx.WeylElement) -> cx.WeylElement:
    """Prepend the negated new largest value and negate the old first
    letter, embedding into the fixed-point-free atoms one rank up."""
    if w.kind != "D" or w.rank % 2 == 0:
        raise ValueError("the prepending embedding needs odd rank")
    line = w.oneline
    return cx.WeylElement("D", (-len(line) - 1, -line[0]) + line[1:])


def vee(z: cx.WeylElement) -> cx.WeylElement:
    """Append the negated new largest value and flip the letter of
    absolute size one; sends diamond-twisted involutions of rank n to
    ordinary involutions of rank n+1."""
    if z.kind != "D":
        raise ValueError("the extension acts on even-signed permutations")
    if not cx.is_twisted_involution("diamond", z):
        raise ValueError(f"{z!r} is not a diamond-twisted involution")
    line = tuple(-v if abs(v) == 1 else v for v in z.oneline)
    return cx.WeylElement("D", line + (-z.rank - 1,))


def clan_vee(space: SymSpace, gamma: Clan) -> tuple[SymSpace, Clan]:
    """Extend an orbit index by the pair of new extreme base points,
    matching the involution extension: psi of the extended clan is
    vee of psi of the clan."""
    n = space.n
    added = frozenset({-n - 1, n + 1})
    base = tuple(i for i in range(-n - 1, n + 2) if i)
    if space.case == "DII":
        if space.p >= space.q:
            bigger = SymSpace("DI", n + 1, space.p + 2, space.q)
            extended = Clan(base, gamma.plus | added, gamma.minus, gamma.matching)
        else:
            bigger = SymSpace("DI", n + 1, space.p, space.q + 2)
            extended = Clan(base, gamma.plus, gamma.minus | added, gamma.matching)
        return bigger, extended
    if space.case == "DIV":
        bigger = SymSpace("DIII", n + 1)
        extended = Clan(base, gamma.plus, gamma.minus | added, gamma.matching)
        return bigger, extended
    raise ValueError(f"no index extension for {space!r}")


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Classification:
    """Closed-form predicates for one orbit index or orbit image.

    alternating is None when only the orbit image is known and the
    predicate depends on the sign pattern of the index."""

    multiplicity_free: bool
    uniform: bool
    alternating: Optional[bool]


def classify(space: SymSpace, index) -> Classification:
    """Classify an orbit index (a clan, or an involution for the two
    matchless cases) or a bare orbit image."""
    gamma: Optional[GammaIndex] = None
    if isinstance(index, Clan) or space.case in ("AI", "AII"):
        gamma = index
        z = rs_map(space, gamma)
    else:
        z = index
        if not in_rs_image(space, z):
            raise ValueError(f"{z!r} is not an orbit image for {space!r}")
    case = space.case
    neg = len(cx.negate_set(_underlying(space, z))) if case[0] != "A" else None
    diagonal = case[0] != "A" and all(
        abs(v) == i for i, v in enumerate(z.oneline, start=1)
    )

    if case in ("AII", "AIII", "CII", "DIII", "DIV"):
        free = True
    elif case == "AI":
        free = z == cx.identity("A", space.n)
    elif case == "BI":
        free = neg == space.k and diagonal
    elif case == "CI":
        if gamma is None:
            free = neg <= 1 and diagonal
        else:
            one_sided = gamma.plus <= frozenset(range(1, space.n + 1)) or (
                gamma.minus <= frozenset(range(1, space.n + 1))
            )
            free = one_sided and all(a + b == 0 for a, b in gamma.matching)
    elif case == "DI":
        free = neg == space.k and diagonal
    else:  # DII
        free = neg == space.k and diagonal

    if case in ("AI", "AII"):
        uniform = True
    elif case == "AIII":
        uniform = len(cx.twist_set(z)) == space.k
    elif case in ("BI", "CII", "DI", "DII"):
        uniform = neg == space.k
    elif case == "CI":
        uniform = neg <= 1
    elif case == "DIII":
        uniform = neg in (0, 2)
    else:  # DIV
        uniform = neg == 1

    if case in ("AI", "AII"):
        alternating: Optional[bool] = True
    elif case in ("DIII", "DIV"):
        alternating = neg <= 1
    elif gamma is None:
        alternating = None
    else:
        pts = sorted(gamma.points)
        alternating = all(
            (a in gamma.plus) != (b in gamma.plus)
            for a, b in zip(pts, pts[1:])
            if a >= 0
        )
    return Classification(free, uniform, alternating)


# ---------------------------------------------------------------------------
# verification report

def _verify_entry(space: SymSpace, z: cx.WeylElement, by_image: dict) -> dict:
    """Verification record for one orbit image: the per-cell summary and
    whether the closed forms agree with the graph walk for every index
    in the fiber."""
    admissible = matchings_for(space, z)
    order = space_order(space)
    universe = _group_lines(space.kind, space.n)
    extended = extended_atoms(space, z)
    cells = []
    agree = True
    combined: set[cx.WeylElement] = set()
    for m in admissible:
        bot = generator_bot(space, z, m)
        lines = words.up_set(order, bot.oneline, universe)
        atoms = frozenset(cx.WeylElement(space.kind, line) for line in lines)
        ranks = sorted(cell_rank(space, w) for w in atoms)
        span = [r if isinstance(r, int) else float(r) for r in (ranks[0], ranks[-1])]
        cells.append(
            {
                "matching": matching_to_json(m),
                "generator": list(bot.oneline),
                "size": len(atoms),
                "rank_span": span,
            }
        )
        if shape(space, bot) != m or combined & atoms:
            agree = False
        combined |= atoms
    if combined != extended:
        agree = False
    for gamma, (bfs_atoms, bfs_d) in by_image.get(z, []):
        decomposition = atoms_closed(space, gamma)
        if decomposition.atoms() != bfs_atoms:
            agree = False
        elif any(decomposition.dz[w] != bfs_d[w] for w in bfs_atoms):
            agree = False
    return {
        "z": list(z.oneline),
        "matchings": len(admissible),
        "cells": cells,
        "bfs_agree": agree,
    }


def verify_space(space: SymSpace, threads: int = 1) -> dict:
    """Compare the closed forms against the graph walk over a space.

    Returns one record per orbit image with the admissible matching
    count, a per-cell summary, and the oracle agreement flag.
    """
    walked = wo.atoms_bfs(space)
    by_image: dict[cx.WeylElement, list] = {}
    for gamma, pair in walked.items():
        by_image.setdefault(rs_map(space, gamma), []).append((gamma, pair))
    images = sorted(by_image, key=lambda z: (cx.length(z), z.oneline))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = list(
                pool.map(lambda z: _verify_entry(space, z, by_image), images)
            )
    else:
        entries = [_verify_entry(space, z, by_image) for z in images]
    return {
        "space": repr(space),
        "entries": entries,
        "agree": all(e["bfs_agree"] for e in entries),
    }
