"""Noncrossing symmetric perfect matchings on X disjoint-union -X.

Families NCSP(X), NCSP(X:k) (exactly k trivial blocks {-i,i}), and
NCSP+(X:k) (at least k trivial blocks), their minimal elements, the
covering relation used to grade them, and clan alignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .clans import Clan


@dataclass(frozen=True)
class SignedMatching:
    """A noncrossing symmetric perfect matching on support u -support."""

    support: tuple[int, ...]
    blocks: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if tuple(sorted(self.support)) != self.support or any(
            x <= 0 for x in self.support
        ):
            raise ValueError("support must be sorted positive integers")
        ground = set(self.support) | {-x for x in self.support}
        seen: set[int] = set()
        for a, b in self.blocks:
            if a >= b or a not in ground or b not in ground:
                raise ValueError(f"bad block ({a},{b})")
            if {a, b} & seen:
                raise ValueError("blocks overlap")
            seen |= {a, b}
        if seen != ground:
            raise ValueError("blocks do not cover the ground set")
        for a, b in self.blocks:
            if tuple(sorted((-b, -a))) not in self.blocks:
                raise ValueError(f"matching not symmetric at ({a},{b})")
        blocks = sorted(self.blocks)
        for (a, c), (b, d) in itertools.combinations(blocks, 2):
            if a < b < c < d or b < a < d < c:
                raise ValueError(f"blocks ({a},{c}) and ({b},{d}) cross")

    def partner(self, i: int) -> int:
        for a, b in self.blocks:
            if i == a:
                return b
            if i == b:
                return a
        raise KeyError(i)

    def __repr__(self) -> str:
        return f"SignedMatching({sorted(self.half_blocks())})"

    def half_blocks(self) -> list[tuple[int, int]]:
        """One block per symmetric pair: positive blocks {a,b}, and
        trivial blocks as (-i, i)."""
        out = []
        for a, b in self.blocks:
            if a > 0 or a == -b:
                out.append((a, b))
        return sorted(out)


def triv_set(m: SignedMatching) -> tuple[int, ...]:
    return tuple(sorted(i for i in m.support if (-i, i) in m.blocks))


def triv(m: SignedMatching) -> int:
    return len(triv_set(m))


def from_half_blocks(support, half_blocks) -> SignedMatching:
    """Matching from one block per symmetric pair (the convention of
    half_blocks); the negated twins are filled in."""
    support = tuple(sorted(support))
    blocks = set()
    for a, b in half_blocks:
        a, b = min(a, b), max(a, b)
        blocks.add((a, b))
        blocks.add(tuple(sorted((-a, -b))))
    return SignedMatching(support, frozenset(blocks))


def matching_to_json(m: SignedMatching) -> dict:
    return {"support": list(m.support), "blocks": [list(b) for b in m.half_blocks()]}


def matching_from_json(data: dict) -> SignedMatching:
    return from_half_blocks(tuple(data["support"]), [tuple(b) for b in data["blocks"]])


def _noncrossing_perfect(points: tuple[int, ...]) -> Iterator[frozenset]:
    """Noncrossing perfect matchings on an even set of points."""
    if not points:
        yield frozenset()
        return
    a = points[0]
    for idx in range(1, len(points), 2):
        b = points[idx]
        inside = points[1:idx]
        outside = points[idx + 1 :]
        for m1 in _noncrossing_perfect(inside):
            for m2 in _noncrossing_perfect(outside):
                yield m1 | m2 | {(a, b)}


def enumerate_ncsp(
    support, triv_eq: Optional[int] = None, triv_ge: Optional[int] = None
) -> list[SignedMatching]:
    """NCSP(X), NCSP(X:k) with triv_eq=k, or NCSP+(X:k) with triv_ge=k.

    A matching here is a set of trivial blocks {-i,i} together with
    mirrored pairs of same-sign blocks; no positive block may straddle
    a trivial value, so the nontrivial part splits into independent
    noncrossing matchings on the runs between consecutive trivial
    values.
    """
    support = tuple(sorted(support))
    m = len(support)
    out = []
    for t_count in range(m + 1):
        if triv_eq is not None and t_count != triv_eq:
            continue
        if triv_ge is not None and t_count < triv_ge:
            continue
        if (m - t_count) % 2:
            continue
        for trivial in itertools.combinations(support, t_count):
            segments = _runs_between(support, set(trivial))
            if any(len(seg) % 2 for seg in segments):
                continue
            for parts in itertools.product(
                *(list(_noncrossing_perfect(seg)) for seg in segments)
            ):
                half = [(-i, i) for i in trivial]
                for part in parts:
                    half += list(part)
                out.append(from_half_blocks(support, half))
    out.sort(key=lambda mm: sorted(mm.blocks))
    return out


def _runs_between(support: tuple[int, ...], trivial: set[int]) -> list[tuple[int, ...]]:
    segments, run = [], []
    for x in support:
        if x in trivial:
            if run:
                segments.append(tuple(run))
            run = []
        else:
            run.append(x)
    if run:
        segments.append(tuple(run))
    return segments


def ncsp_oracle(support) -> list[SignedMatching]:
    """NCSP(X) by filtering every perfect matching on X u -X through
    the type invariants; validates enumerate_ncsp."""
    support = tuple(sorted(support))
    ground = sorted(set(support) | {-x for x in support})
    out = []
    for pairs in _all_perfect(ground):
        try:
            out.append(SignedMatching(support, frozenset(pairs)))
        except ValueError:
            continue
    out.sort(key=lambda mm: sorted(mm.blocks))
    return out


def _all_perfect(points: list[int]) -> Iterator[set]:
    if not points:
        yield set()
        return
    a = points[0]
    for idx in range(1, len(points)):
        b = points[idx]
        rest = points[1:idx] + points[idx + 1 :]
        for sub in _all_perfect(rest):
            yield sub | {(a, b)}


def m_min(support, k: int) -> SignedMatching:
    """Consecutive smallest elements paired, the k largest trivial."""
    support = tuple(sorted(support))
    m = len(support)
    if not 0 <= k <= m or (m - k) % 2:
        raise ValueError(f"need 0 <= k <= {m} with {m}-k even, got k={k}")
    half = [(support[i], support[i + 1]) for i in range(0, m - k, 2)]
    half += [(-x, x) for x in support[m - k :]]
    return from_half_blocks(support, half)


def lessdot_covers(n: SignedMatching) -> set[SignedMatching]:
    """All M with M lessdot N: the two block-replacement moves, each
    lowering the nesting potential while fixing the trivial count."""
    support = n.support
    out = set()
    pos = {b for b in n.blocks if b[0] > 0}
    trivial = set(triv_set(n))
    for i, x in enumerate(support[:-1]):
        nxt = support[i + 1]
        if x in trivial:
            # {+-x}, +-{nxt, p} -> +-{x, nxt}, {+-p}
            for a, b in pos:
                if a == nxt:
                    out.add(_replace(n, [(-x, x), (a, b)], [(x, nxt), (-b, b)]))
        else:
            partner_x = n.partner(x)
            if partner_x < x:
                continue
            q = partner_x
            if nxt in trivial:
                continue
            p = n.partner(nxt)
            if not (nxt < p < q):
                continue
            if any(a < x < b for a, b in pos):
                continue
            out.add(_replace(n, [(x, q), (nxt, p)], [(x, nxt), (p, q)]))
    return out


def _replace(n: SignedMatching, old_half, new_half) -> SignedMatching:
    blocks = set(n.blocks)
    for a, b in old_half:
        blocks.discard(tuple(sorted((a, b))))
        blocks.discard(tuple(sorted((-a, -b))))
    for a, b in new_half:
        blocks.add(tuple(sorted((a, b))))
        blocks.add(tuple(sorted((-a, -b))))
    return SignedMatching(n.support, frozenset(blocks))


def nb(m: SignedMatching) -> int:
    """Nesting potential: pairs {{a,d},{b,c}} with 0<a<b<c<d, plus
    pairs (trivial {+-a}, block {b,c}) with 0<a<b<c."""
    count = 0
    pos = sorted(b for b in m.blocks if b[0] > 0)
    for (a, d), (b, c) in itertools.permutations(pos, 2):
        if a < b < c < d:
            count += 1
    for a in triv_set(m):
        for b, c in pos:
            if a < b:
                count += 1
    return count


def is_gamma_aligned(m: SignedMatching, gamma: Clan) -> bool:
    """No block {a,b} with 0<a<b inside S+ or inside S-."""
    for a, b in m.blocks:
        if 0 < a:
            if {a, b} <= gamma.plus or {a, b} <= gamma.minus:
                return False
    return True
