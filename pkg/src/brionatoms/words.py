"""Word calculus on integer sequences.

Words are tuples of integers; one-line representations of permutations and
signed permutations are used directly as words.  This module provides the
deduplication and pair-set assembly operators, cycle sets of involutions,
nested descents and their signed refinement, the pattern-rewrite word orders,
well-nestedness tests, and the even-signed rank functions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from . import coxeter as cx
from .matchings import SignedMatching

Word = tuple[int, ...]


def dedup(w: Iterable[int]) -> Word:
    """Remove each repeated letter after its first appearance."""
    seen = set()
    out = []
    for a in w:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return tuple(out)


def assemble(pairs: Iterable[tuple[int, int]], mode: str = "des") -> Word:
    """Flatten a pair set into a word, pairs sorted by (second, first).

    mode "des" interleaves as b1 a1 b2 a2 ... and mode "asc" as
    a1 b1 a2 b2 ..., deduplicating afterwards.
    """
    if mode not in ("des", "asc"):
        raise ValueError(f"mode must be 'des' or 'asc', got {mode!r}")
    ordered = sorted(pairs, key=lambda ab: (ab[1], ab[0]))
    flat: list[int] = []
    for a, b in ordered:
        flat.extend((b, a) if mode == "des" else (a, b))
    return dedup(flat)


def cyc_sets(
    z: cx.WeylElement, matching: Optional[SignedMatching] = None
) -> frozenset[tuple[int, int]]:
    """Cycle set of an involution, optionally augmented by a matching.

    For kind A this is {(a, b) : a <= b = z(a)}.  For signed kinds it is
    {(a, b) : |a| < z(a) = b} together with the positive fixed points (c, c).
    A matching supported on the negated points adds one pair (-b, a) for each
    of its blocks {a, b} with 0 < a < b.
    """
    if cx.compose(z, z) != cx.identity(z.kind, z.rank):
        raise ValueError(f"{z!r} is not an involution")
    n = len(z.oneline)
    if z.kind == "A":
        if matching is not None:
            raise ValueError("matchings only augment signed involutions")
        return frozenset((a, z(a)) for a in range(1, n + 1) if a <= z(a))
    pairs = {(a, z(a)) for a in range(-n, n + 1) if a and abs(a) < z(a)}
    pairs |= {(c, c) for c in range(1, n + 1) if z(c) == c}
    if matching is not None:
        negated = cx.negate_set(z)
        if not set(matching.support) <= negated:
            raise ValueError("matching support must lie in the negated points")
        for a, b in matching.half_blocks():
            if a > 0:
                pairs.add((-b, a))
    return frozenset(pairs)


def twisted_cyc_sets(
    z: cx.WeylElement, matching: SignedMatching
) -> frozenset[tuple[int, int]]:
    """Pairs (a, b) with a < b a block of the matching, or a > b = n+2-z(a)."""
    if z.kind != "A":
        raise ValueError("twisted cycle sets require kind A")
    if not cx.is_twisted_involution("star", z):
        raise ValueError(f"{z!r} is not a twisted involution")
    n1 = len(z.oneline)
    if not set(matching.support) <= cx.twist_set(z):
        raise ValueError("matching support must lie in the twist set")
    pairs = {(a, b) for a, b in matching.half_blocks() if a > 0}
    pairs |= {(a, n1 + 1 - z(a)) for a in range(1, n1 + 1) if a > n1 + 1 - z(a)}
    return frozenset(pairs)


def nested_descents(w: Iterable[int]) -> tuple[frozenset[tuple[int, int]], frozenset[int]]:
    """Nested descent pairs and nested residue letters of a word.

    Repeatedly removes the first descent pair (w_i, w_{i+1}) with
    w_i > w_{i+1}; the removed pairs form the first component and the
    leftover ascending word gives the residue set.
    """
    word = list(w)
    if len(set(word)) != len(word):
        raise ValueError("nested descents require distinct letters")
    ndes = []
    while True:
        i = next((j for j in range(len(word) - 1) if word[j] > word[j + 1]), None)
        if i is None:
            break
        ndes.append((word[i], word[i + 1]))
        del word[i : i + 2]
    return frozenset(ndes), frozenset(word)


def ndes_pm(w: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Signed nested descents: pair up negative residues, two at a time.

    With the residues sorted as a_1 < ... < a_p < 0 < b_1 < ... < b_q, the
    pairs (a_1, a_2), (a_3, a_4), ... are added, and when p is odd the
    leftover a_p is paired with b_1 provided |a_p| > b_1 > 0.
    """
    ndes, nres = nested_descents(w)
    neg = sorted(a for a in nres if a < 0)
    pos = sorted(b for b in nres if b > 0)
    extra = [(neg[i], neg[i + 1]) for i in range(0, len(neg) - 1, 2)]
    if len(neg) % 2 and pos and -neg[-1] > pos[0]:
        extra.append((neg[-1], pos[0]))
    return ndes | frozenset(extra)


def word_inversions(w: Iterable[int]) -> int:
    """Number of pairs i < j with w_i > w_j."""
    word = tuple(w)
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def has_consecutive_321(w: Iterable[int]) -> bool:
    word = tuple(w)
    return any(word[i] > word[i + 1] > word[i + 2] for i in range(len(word) - 2))


def rank_d(w: Iterable[int], k: int = 0):
    """Even-signed rank of a signed word; k > 0 applies the suffix rule.

    For k = 0 the word splits into w_R (letters that occur as second
    coordinates of the signed nested descents) and the complementary
    positions l_1 < ... < l_j, from which the mirrored word
    w_L = (-w(l_j), ..., -w(l_1), w(l_1), ..., w(l_j)) is formed.  The rank
    is (inv(w_L) - neg(w)) / 2 - inv(w_R) where neg counts negative letters
    of the full word.  For k > 0 the rank is that of the suffix
    w_{k+1} ... w_n plus the number of negative letters in the suffix.

    The value is a half-integer exactly when w_R has oddly many negative
    letters; that parity is constant on each graded cell, and covering
    steps always raise the rank by exactly 1.  Such values are returned
    as exact Fractions.
    """
    word = tuple(w)
    if len({abs(a) for a in word}) != len(word) or 0 in word:
        raise ValueError("rank requires distinct nonzero absolute values")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > 0:
        suffix = word[k:]
        return rank_d(suffix, 0) + sum(1 for a in suffix if a < 0)
    second = {b for _, b in ndes_pm(word)}
    pos_r = [i for i, a in enumerate(word) if a in second]
    pos_l = [i for i, a in enumerate(word) if a not in second]
    w_r = tuple(word[i] for i in pos_r)
    w_l = tuple(-word[i] for i in reversed(pos_l)) + tuple(word[i] for i in pos_l)
    num = word_inversions(w_l) - sum(1 for a in word if a < 0)
    if num % 2:
        return Fraction(num, 2) - word_inversions(w_r)
    return num // 2 - word_inversions(w_r)


def standardize(w: Iterable[int]) -> cx.WeylElement:
    """Order-isomorphic permutation of [n] as a kind-A element."""
    word = tuple(w)
    if len(set(word)) != len(word):
        raise ValueError("standardization requires distinct letters")
    if len(word) < 2:
        raise ValueError("standardization needs at least two letters")
    rel = {a: i for i, a in enumerate(sorted(word), start=1)}
    return cx.WeylElement("A", tuple(rel[a] for a in word))


ORDER_VARIANTS = (
    "precsim",
    "precapprox",
    "precsim_d",
    "ll_d",
    "prec_aiii",
    "precsim_di",
)


@dataclass(frozen=True)
class WordOrder:
    """A pattern-rewrite word order.

    variant "precsim": u BCA v -> u CAB v with A < B < C and len(u) >= k.
    variant "precapprox": u BCAD v -> u ADBC v with A < B < C < D,
        len(u) >= k and len(u) = k mod 2.
    variant "precsim_d": the k = 0 precsim moves anywhere, plus the initial
        move (-B) C A ... -> (-C) A B ... with A < B < C.
    variant "ll_d": precsim_d plus u A (-B) v C (-D) w -> u A (-D) v B (-C) w
        with 0 < |A| < B < C < D and all letters of u, v less than B in
        absolute value.
    variant "prec_aiii": u1 B1 B2 v A2 A1 u2 -> u1 B2 B1 v A1 A2 u2 with
        A1 < A2, B1 < B2, len(u1) = len(u2) and len(v) >= k.
    variant "precsim_di": for k = 0 identical to precsim_d; for k > 0 the
        rank-k precsim moves plus the sign move u v -> u~ v~ negating the
        first letters of both halves when len(u) = k and 0 < v_1 < |u_1|.
    """

    variant: str
    k: int = 0

    def __post_init__(self) -> None:
        if self.variant not in ORDER_VARIANTS:
            raise ValueError(f"unknown order variant {self.variant!r}")
        if self.k < 0:
            raise ValueError("order parameter k must be nonnegative")
        if self.variant in ("precsim_d", "ll_d") and self.k:
            raise ValueError(f"variant {self.variant} takes no parameter")


def _moves_precsim(w: Word, k: int, down: bool) -> Iterator[Word]:
    for i in range(k, len(w) - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if not down and z < x < y:
            yield w[:i] + (y, z, x) + w[i + 3 :]
        if down and y < z < x:
            yield w[:i] + (z, x, y) + w[i + 3 :]


def _moves_precapprox(w: Word, k: int, down: bool) -> Iterator[Word]:
    for i in range(k, len(w) - 3, 2):
        x, y, z, t = w[i : i + 4]
        if not down and z < x < y < t:
            yield w[:i] + (z, t, x, y) + w[i + 4 :]
        if down and x < z < t < y:
            yield w[:i] + (z, t, x, y) + w[i + 4 :]


def _moves_initial_sign(w: Word, down: bool) -> Iterator[Word]:
    if len(w) < 3:
        return
    x, y, z = w[0], w[1], w[2]
    if not down and z < -x < y:
        yield (-y, z, -x) + w[3:]
    if down and y < z < -x:
        yield (-z, -x, y) + w[3:]


def _moves_ll_extra(w: Word, down: bool) -> Iterator[Word]:
    m = len(w)
    for i in range(m - 3):
        a = w[i]
        if a == 0:
            continue
        if not down:
            big = -w[i + 1]
            if not 0 < abs(a) < big:
                continue
            if any(abs(x) >= big for x in w[:i]):
                continue
            for j in range(i + 2, m - 1):
                c, d = w[j], -w[j + 1]
                if big < c < d:
                    yield w[: i + 1] + (-d,) + w[i + 2 : j] + (big, -c) + w[j + 2 :]
                if abs(w[j]) >= big:
                    break
        else:
            d = -w[i + 1]
            if not 0 < abs(a) < d:
                continue
            for j in range(i + 2, m - 1):
                big, c = w[j], -w[j + 1]
                if (
                    abs(a) < big < c < d
                    and all(abs(x) < big for x in w[:i])
                    and all(abs(x) < big for x in w[i + 2 : j])
                ):
                    yield w[: i + 1] + (-big,) + w[i + 2 : j] + (c, -d) + w[j + 2 :]


def _moves_prec_aiii(w: Word, k: int, down: bool) -> Iterator[Word]:
    m = len(w)
    for i in range(m):
        if m - 2 * i - 4 < k:
            break
        p, q, r, s = i, i + 1, m - i - 2, m - i - 1
        swap = (not down and w[p] < w[q] and w[r] > w[s]) or (
            down and w[p] > w[q] and w[r] < w[s]
        )
        if swap:
            lst = list(w)
            lst[p], lst[q] = lst[q], lst[p]
            lst[r], lst[s] = lst[s], lst[r]
            yield tuple(lst)


def _moves_di_sign(w: Word, k: int, down: bool) -> Iterator[Word]:
    if len(w) <= k:
        return
    if not down and 0 < w[k] < abs(w[0]):
        yield (-w[0],) + w[1:k] + (-w[k],) + w[k + 1 :]
    if down and w[k] < 0 and -w[k] < abs(w[0]):
        yield (-w[0],) + w[1:k] + (-w[k],) + w[k + 1 :]


def _moves(order: WordOrder, w: Word, down: bool) -> Iterator[Word]:
    if order.variant == "precsim":
        yield from _moves_precsim(w, order.k, down)
    elif order.variant == "precapprox":
        yield from _moves_precapprox(w, order.k, down)
    elif order.variant == "precsim_d":
        yield from _moves_precsim(w, 0, down)
        yield from _moves_initial_sign(w, down)
    elif order.variant == "ll_d":
        yield from _moves_precsim(w, 0, down)
        yield from _moves_initial_sign(w, down)
        yield from _moves_ll_extra(w, down)
    elif order.variant == "prec_aiii":
        yield from _moves_prec_aiii(w, order.k, down)
    elif order.variant == "precsim_di":
        if order.k == 0:
            yield from _moves_precsim(w, 0, down)
            yield from _moves_initial_sign(w, down)
        else:
            yield from _moves_precsim(w, order.k, down)
            yield from _moves_di_sign(w, order.k, down)


def moves_up(order: WordOrder, w: Iterable[int]) -> set[Word]:
    """All words one covering move above w."""
    return set(_moves(order, tuple(w), down=False))


def moves_down(order: WordOrder, w: Iterable[int]) -> set[Word]:
    """All words one covering move below w."""
    return set(_moves(order, tuple(w), down=True))


def order_leq(order: WordOrder, u: Iterable[int], v: Iterable[int]) -> bool:
    """Whether u <= v in the given order (reachability by upward moves)."""
    uu, vv = tuple(u), tuple(v)
    if len(uu) != len(vv):
        raise ValueError("words must have equal length")
    if uu == vv:
        return True
    if sorted(abs(a) for a in uu) != sorted(abs(a) for a in vv):
        return False
    if order.variant in ("precsim", "precapprox", "prec_aiii") and sorted(
        uu
    ) != sorted(vv):
        return False
    seen = {uu}
    frontier = [uu]
    while frontier:
        new: list[Word] = []
        for word in frontier:
            for after in _moves(order, word, down=False):
                if after == vv:
                    return True
                if after not in seen:
                    seen.add(after)
                    new.append(after)
        frontier = new
    return False


def up_set(
    order: WordOrder, u: Iterable[int], universe: Iterable[Iterable[int]]
) -> set[Word]:
    """Forward closure of u under the order's moves, within the universe."""
    allowed = {tuple(w) for w in universe}
    start = tuple(u)
    seen = {start}
    frontier = [start]
    while frontier:
        new: list[Word] = []
        for word in frontier:
            for after in _moves(order, word, down=False):
                if after not in seen:
                    seen.add(after)
                    new.append(after)
        frontier = new
    return seen & allowed


def well_nested_check(words: Iterable[Iterable[int]]) -> bool:
    """Whether a set of partial permutations forms a well-nested family.

    The family must be closed under single rank-0 precsim moves in both
    directions and contain no word with a consecutive 321 pattern.
    """
    family = {tuple(w) for w in words}
    for w in family:
        if len(set(w)) != len(w):
            raise ValueError("well-nestedness applies to partial permutations")
        if has_consecutive_321(w):
            return False
        for after in _moves_precsim(w, 0, down=False):
            if after not in family:
                return False
        for before in _moves_precsim(w, 0, down=True):
            if before not in family:
                return False
    return True
