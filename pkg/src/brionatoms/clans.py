"""Clans as orbit indices.

A clan is a triple (S+, S-, M): two disjoint sign sets and a perfect
matching M on the rest of a finite base set X of integers.  Per-case
enumeration produces the indexing sets of K-orbits for the ten
classical symmetric spaces AI, AII, AIII, BI, CI, CII, DI, DII, DIII,
DIV, together with the dense-orbit index and the map psi onto twisted
involutions of the Weyl group.

Cases AI and AII index orbits by (fixed-point-free) involutions of
S_{n+1} directly, with no clan wrapper; psi is the identity there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from . import coxeter as cx

CASES = ("AI", "AII", "AIII", "BI", "CI", "CII", "DI", "DII", "DIII", "DIV")
CLAN_CASES = ("AIII", "BI", "CI", "CII", "DI", "DII", "DIII", "DIV")


@dataclass(frozen=True)
class Clan:
    """Sign sets and matched pairs over an ordered integer base."""

    base: tuple[int, ...]
    plus: frozenset[int]
    minus: frozenset[int]
    matching: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        base = set(self.base)
        if len(self.base) != len(base) or tuple(sorted(self.base)) != self.base:
            raise ValueError("base must be strictly increasing")
        if self.plus & self.minus:
            raise ValueError("sign sets must be disjoint")
        covered = set(self.plus) | set(self.minus)
        if not covered <= base:
            raise ValueError("sign points outside base")
        for pair in self.matching:
            a, b = pair
            if a >= b or not {a, b} <= base:
                raise ValueError(f"bad matching block {pair}")
            if {a, b} & covered:
                raise ValueError(f"block {pair} overlaps another block")
            covered |= {a, b}
        if covered != base:
            raise ValueError("blocks do not cover the base")

    def sign(self, i: int) -> Optional[str]:
        if i in self.plus:
            return "+"
        if i in self.minus:
            return "-"
        return None

    def partner(self, i: int) -> Optional[int]:
        for a, b in self.matching:
            if i == a:
                return b
            if i == b:
                return a
        return None

    @property
    def points(self) -> frozenset[int]:
        return self.plus | self.minus

    @property
    def type(self) -> int:
        return len(self.plus) - len(self.minus)

    def __repr__(self) -> str:
        return f"Clan({one_line_str(self)} on {list(self.base)})"


GammaIndex = Union[Clan, cx.WeylElement]


def clan_from_one_line(base, symbols) -> Clan:
    """Build a clan from a base set and a sequence over {+,-} and ints."""
    base = tuple(sorted(base))
    symbols = list(symbols)
    if len(base) != len(symbols):
        raise ValueError(f"{len(symbols)} symbols for {len(base)} base points")
    plus, minus = set(), set()
    first: dict[int, int] = {}
    done: set[int] = set()
    pairs = set()
    for pos, sym in zip(base, symbols):
        if sym == "+":
            plus.add(pos)
        elif sym == "-":
            minus.add(pos)
        elif isinstance(sym, int):
            if sym in done:
                raise ValueError(f"label {sym} occurs more than twice")
            if sym in first:
                pairs.add((first.pop(sym), pos))
                done.add(sym)
            else:
                first[sym] = pos
        else:
            raise ValueError(f"bad symbol {sym!r}")
    if first:
        raise ValueError(f"unpaired labels {sorted(first)}")
    return Clan(base, frozenset(plus), frozenset(minus), frozenset(pairs))


def one_line(gamma: Clan) -> tuple:
    """Canonical one-line representation; matched pairs are labeled
    1, 2, ... by order of first occurrence."""
    labels: dict[int, int] = {}
    out = []
    for i in gamma.base:
        sym = gamma.sign(i)
        if sym is not None:
            out.append(sym)
            continue
        j = gamma.partner(i)
        key = min(i, j)
        if key not in labels:
            labels[key] = len(labels) + 1
        out.append(labels[key])
    return tuple(out)


def one_line_str(gamma: Clan) -> str:
    return "(" + ",".join(str(s) for s in one_line(gamma)) + ")"


def clan_key(gamma: Clan):
    """Total order on clans with a common base: by one-line word."""
    return tuple(
        (0, 0) if s == "+" else (0, 1) if s == "-" else (1, s) for s in one_line(gamma)
    )


def reversal(gamma: Clan) -> Clan:
    """Image under the order-reversing bijection of the base set."""
    rev = dict(zip(gamma.base, reversed(gamma.base)))
    return Clan(
        gamma.base,
        frozenset(rev[i] for i in gamma.plus),
        frozenset(rev[i] for i in gamma.minus),
        frozenset(tuple(sorted((rev[a], rev[b]))) for a, b in gamma.matching),
    )


def conjugate(gamma: Clan) -> Clan:
    return Clan(gamma.base, gamma.minus, gamma.plus, gamma.matching)


def toggle(gamma: Clan, points) -> Clan:
    """gamma with the signs of the given isolated points swapped."""
    points = set(points)
    if not points <= set(gamma.base):
        raise ValueError("toggle points outside base")
    plus = (gamma.plus - points) | (gamma.minus & points)
    minus = (gamma.minus - points) | (gamma.plus & points)
    return Clan(gamma.base, frozenset(plus), frozenset(minus), gamma.matching)


def contains(delta: Clan, gamma: Clan) -> bool:
    """True iff delta's sign sets contain gamma's sign sets."""
    return gamma.plus <= delta.plus and gamma.minus <= delta.minus


def equivalent(gamma: Clan, delta: Clan) -> bool:
    return gamma == delta


def is_symmetric_clan(gamma: Clan) -> bool:
    return gamma == reversal(gamma)


def is_skew_symmetric_clan(gamma: Clan) -> bool:
    return gamma == conjugate(reversal(gamma))


def is_strict(gamma: Clan) -> bool:
    return all(a + b != 0 for a, b in gamma.matching)


def h_statistic(gamma: Clan) -> int:
    n = gamma.base[-1]
    return sum(1 for i in gamma.plus if 0 < i <= n) + sum(
        1 for a, b in gamma.matching if 0 < a and b <= n
    )


def is_even_strict(gamma: Clan) -> bool:
    return is_strict(gamma) and h_statistic(gamma) % 2 == 0


def clan_predicates(gamma: Clan) -> dict:
    return {
        "type": gamma.type,
        "is_symmetric_pq": is_symmetric_clan(gamma),
        "is_skew_symmetric": is_skew_symmetric_clan(gamma),
        "is_strict": is_strict(gamma),
        "is_even_strict": is_even_strict(gamma),
        "h": h_statistic(gamma),
    }


def clan_to_json(gamma: Clan) -> dict:
    return {
        "base": list(gamma.base),
        "plus": sorted(gamma.plus),
        "minus": sorted(gamma.minus),
        "matching": sorted([a, b] for a, b in gamma.matching),
    }


def clan_from_json(data: dict) -> Clan:
    return Clan(
        tuple(sorted(data["base"])),
        frozenset(data["plus"]),
        frozenset(data["minus"]),
        frozenset(tuple(sorted(pair)) for pair in data["matching"]),
    )


# ---------------------------------------------------------------------------
# symmetric spaces

@dataclass(frozen=True, order=True)
class SymSpace:
    """A tagged classical case with its parameters."""

    case: str
    n: int
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self) -> None:
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        n, p, q = self.n, self.p, self.q
        if n < 1:
            raise ValueError("rank must be >= 1")
        two_param = self.case in ("AIII", "BI", "CII", "DI", "DII")
        if two_param:
            if p is None or q is None or p < 1 or q < 1:
                raise ValueError(f"{self.case} needs parameters p, q >= 1")
            total = {"AIII": n + 1, "BI": 2 * n + 1}.get(self.case, 2 * n)
            if p + q != total:
                raise ValueError(f"{self.case} needs p+q = {total}, got {p}+{q}")
        elif p is not None or q is not None:
            raise ValueError(f"{self.case} takes no p, q parameters")
        if self.case == "AII" and n % 2 == 0:
            raise ValueError("AII needs n odd")
        if self.case == "CII" and p % 2 == 1:
            raise ValueError("CII needs p even")
        if self.case == "DI" and (p + n) % 2 == 1:
            raise ValueError("DI needs p+n even")
        if self.case == "DII" and (p + n) % 2 == 0:
            raise ValueError("DII needs p+n odd")
        if self.case == "DIII" and n % 2 == 1:
            raise ValueError("DIII needs n even")
        if self.case == "DIV" and n % 2 == 0:
            raise ValueError("DIV needs n odd")

    @property
    def kind(self) -> str:
        if self.case.startswith("A"):
            return "A"
        if self.case.startswith("D"):
            return "D"
        return "BC"

    @property
    def theta(self) -> str:
        if self.case == "AIII":
            return "star"
        if self.case in ("DII", "DIV"):
            return "diamond"
        return "id"

    @property
    def k(self) -> Optional[int]:
        """The per-case lower bound parameter of the image of psi."""
        if self.case == "AIII":
            return abs(self.p - self.q)
        if self.case == "BI":
            return (abs(self.p - self.q) - 1) // 2
        if self.case in ("CII", "DI", "DII"):
            return abs(self.p - self.q) // 2
        return None

    @property
    def base_set(self) -> Optional[tuple[int, ...]]:
        if self.case == "AIII":
            return tuple(range(1, self.n + 2))
        if self.case == "BI":
            return tuple(i for i in range(-self.n, self.n + 1))
        if self.case in ("CI", "CII", "DI", "DII", "DIII", "DIV"):
            return tuple(i for i in range(-self.n, self.n + 1) if i)
        return None

    def __repr__(self) -> str:
        if self.p is not None:
            return f"{self.case}({self.p},{self.q})"
        return f"{self.case}({self.n})"


def make_space(case: str, n=None, p=None, q=None) -> SymSpace:
    """SymSpace from whichever of n or (p, q) determines the rank."""
    if p is not None and q is not None and n is None:
        total = p + q
        if case == "AIII":
            n = total - 1
        elif case == "BI":
            if total % 2 == 0:
                raise ValueError("BI needs p+q odd")
            n = (total - 1) // 2
        else:
            if total % 2 == 1:
                raise ValueError(f"{case} needs p+q even")
            n = total // 2
    if n is None:
        raise ValueError("rank undetermined")
    return SymSpace(case, n, p, q)


# ---------------------------------------------------------------------------
# enumeration

def all_clans(base) -> list[Clan]:
    """Every clan on the given base set (unconstrained helper)."""
    base = tuple(sorted(base))
    out = []
    for matched_size in range(0, len(base) + 1, 2):
        for matched in itertools.combinations(base, matched_size):
            rest = [i for i in base if i not in matched]
            for pairs in _perfect_matchings(list(matched)):
                for signs in itertools.product("+-", repeat=len(rest)):
                    plus = frozenset(i for i, s in zip(rest, signs) if s == "+")
                    minus = frozenset(i for i, s in zip(rest, signs) if s == "-")
                    out.append(Clan(base, plus, minus, frozenset(pairs)))
    out.sort(key=clan_key)
    return out


def _perfect_matchings(points: list[int]) -> Iterator[frozenset]:
    if not points:
        yield frozenset()
        return
    a = points[0]
    for idx in range(1, len(points)):
        b = points[idx]
        rest = points[1:idx] + points[idx + 1 :]
        for sub in _perfect_matchings(rest):
            yield sub | {(a, b)}


def _negation_closed_matchings(points: list[int], strict: bool) -> Iterator[frozenset]:
    """Perfect matchings on a negation-closed set fixed by i -> -i;
    strict forbids the blocks {-i, i}."""
    if not points:
        yield frozenset()
        return
    a = points[0]  # most negative element; its partner determines -a's block
    others = points[1:]
    for b in others:
        if b == -a:
            if strict:
                continue
            rest = [c for c in others if c != b]
            for sub in _negation_closed_matchings(rest, strict):
                yield sub | {(a, -a)}
        elif -b in others or -b == a:
            if -b == a:
                continue  # already covered by the b == -a branch
            rest = [c for c in others if c not in (b, -a, -b)]
            for sub in _negation_closed_matchings(rest, strict):
                yield sub | {tuple(sorted((a, b))), tuple(sorted((-a, -b)))}


def enumerate_clans(space: SymSpace) -> list[GammaIndex]:
    """The indexing set of K-orbits, sorted canonically."""
    case = space.case
    if case == "AI":
        return cx.involutions("A", space.n)
    if case == "AII":
        return [z for z in cx.involutions("A", space.n) if cx.is_fpf_involution(z)]
    if case == "AIII":
        return _standard_clans(space.p, space.q)
    if case in ("BI", "CII", "DI", "DII"):
        return _symmetric_clans(space)
    if case == "CI":
        return _skew_clans(space.n, even_strict=False)
    return _skew_clans(space.n, even_strict=True)


def _standard_clans(p: int, q: int) -> list[Clan]:
    base = tuple(range(1, p + q + 1))
    out = []
    for j in range(0, min(p, q) + 1):
        for matched in itertools.combinations(base, 2 * j):
            rest = [i for i in base if i not in matched]
            for pairs in _perfect_matchings(list(matched)):
                for plus in itertools.combinations(rest, p - j):
                    plus = frozenset(plus)
                    out.append(Clan(base, plus, frozenset(rest) - plus, frozenset(pairs)))
    out.sort(key=clan_key)
    return out


def _symmetric_clans(space: SymSpace) -> list[Clan]:
    n, p, q = space.n, space.p, space.q
    base = space.base_set
    has_zero = 0 in base
    strict = space.case == "CII"
    out = []
    for t_size in range(n + 1):
        for t_pos in itertools.combinations(range(1, n + 1), t_size):
            rest = [i for i in base if i != 0 and abs(i) not in t_pos]
            for pairs in _negation_closed_matchings(rest, strict):
                # each sign orbit {i, -i} carries a common sign and
                # contributes +-2 to the type, the zero point +-1; the
                # type constraint fixes how many orbits are positive
                for zero_sign in ("+", "-") if has_zero else ("",):
                    diff = p - q - (1 if zero_sign == "+" else -1 if zero_sign == "-" else 0)
                    if diff % 2:
                        continue
                    if (t_size + diff // 2) % 2:
                        continue
                    num_plus = (t_size + diff // 2) // 2
                    if not 0 <= num_plus <= t_size:
                        continue
                    for plus_orbits in itertools.combinations(t_pos, num_plus):
                        plus = {i for j in plus_orbits for i in (j, -j)}
                        minus = {i for j in t_pos if j not in plus_orbits for i in (j, -j)}
                        if zero_sign == "+":
                            plus.add(0)
                        elif zero_sign == "-":
                            minus.add(0)
                        out.append(
                            Clan(base, frozenset(plus), frozenset(minus), frozenset(pairs))
                        )
    out.sort(key=clan_key)
    return out


def _skew_clans(n: int, even_strict: bool) -> list[Clan]:
    base = tuple(i for i in range(-n, n + 1) if i)
    out = []
    for t_size in range(n + 1):
        for t_pos in itertools.combinations(range(1, n + 1), t_size):
            rest = [i for i in base if abs(i) not in t_pos]
            for pairs in _negation_closed_matchings(rest, even_strict):
                for signs in itertools.product("+-", repeat=t_size):
                    plus = set()
                    minus = set()
                    for j, s in zip(t_pos, signs):
                        if s == "+":
                            plus |= {j}
                            minus |= {-j}
                        else:
                            minus |= {j}
                            plus |= {-j}
                    gamma = Clan(base, frozenset(plus), frozenset(minus), frozenset(pairs))
                    if even_strict and h_statistic(gamma) % 2:
                        continue
                    out.append(gamma)
    out.sort(key=clan_key)
    return out


# ---------------------------------------------------------------------------
# dense clans and the map psi

def dense_clan(space: SymSpace) -> GammaIndex:
    case, n = space.case, space.n
    if case == "AI":
        return cx.identity("A", n)
    if case == "AII":
        return cx.word_to_element("A", n, tuple(range(1, n + 1, 2)))
    base = space.base_set
    p, q = (space.p, space.q) if space.p is not None else (n, n)
    m = (p + q - abs(p - q)) // 2
    sign = "+" if p >= q else "-"
    if case in ("AIII", "BI", "CI", "DI", "DII"):
        symbols = list(range(1, m + 1)) + [sign] * (len(base) - 2 * m) + list(range(m, 0, -1))
        return clan_from_one_line(base, symbols)
    if case in ("CII", "DIII"):
        right = _pair_swapped(m)
        symbols = list(range(1, m + 1)) + [sign] * (len(base) - 2 * m) + right
        return clan_from_one_line(base, symbols)
    # DIV: (1, 2, ..., n-1, +, -, n-2, n-1, ..., 3, 4, 1, 2)
    right = _pair_swapped(n - 1)
    symbols = list(range(1, n)) + ["+", "-"] + right
    return clan_from_one_line(base, symbols)


def _pair_swapped(m: int) -> list[int]:
    """(m-1, m, m-3, m-2, ..., 3, 4, 1, 2) for even m."""
    if m % 2:
        raise ValueError(f"pair-swapped tail needs an even length, got {m}")
    out = []
    for a in range(m - 1, 0, -2):
        out += [a, a + 1]
    return out


def sigma_of_clan(gamma: Clan) -> cx.WeylElement:
    """The signed involution fixing sign points and swapping matched
    pairs of a (skew-)symmetric clan, in W_n layout."""
    n = gamma.base[-1]
    line = [0] * n
    for i in range(1, n + 1):
        if gamma.sign(i) is not None:
            line[i - 1] = i
        else:
            line[i - 1] = gamma.partner(i)
    return cx.WeylElement("BC", tuple(line))


def pi_of_clan(gamma: Clan) -> cx.WeylElement:
    """The involution of S_{p+q} fixing sign points and swapping
    matched pairs of a standard (p,q)-clan."""
    m = len(gamma.base)
    line = [0] * m
    for i in gamma.base:
        line[i - 1] = i if gamma.sign(i) is not None else gamma.partner(i)
    return cx.WeylElement("A", tuple(line))


def left_t0(w: cx.WeylElement) -> cx.WeylElement:
    """t_0 * w in BC layout (flips the value of absolute size 1)."""
    return cx.WeylElement("BC", tuple(-v if abs(v) == 1 else v for v in w.oneline))


def rs_map(space: SymSpace, gamma: GammaIndex) -> cx.WeylElement:
    """The map psi onto twisted involutions of the Weyl group."""
    case = space.case
    if case in ("AI", "AII"):
        if not isinstance(gamma, cx.WeylElement):
            raise ValueError(f"{case} indexes orbits by involutions directly")
        return gamma
    if not isinstance(gamma, Clan) or gamma.base != space.base_set:
        raise ValueError(f"{gamma!r} is not an index for {space!r}")
    if case == "AIII":
        w0 = cx.longest_element("A", space.n)
        return cx.compose(w0, pi_of_clan(gamma))
    z = cx.bar_negate(sigma_of_clan(gamma))
    if case in ("DII", "DIV"):
        z = left_t0(z)
    if space.kind == "D":
        return cx.as_kind(z, "D")
    return z


def rs_image(space: SymSpace) -> list[cx.WeylElement]:
    """Closed form of the image of psi, sorted canonically."""
    case, n, k = space.case, space.n, space.k
    if case == "AI":
        return cx.involutions("A", n)
    if case == "AII":
        return [z for z in cx.involutions("A", n) if cx.is_fpf_involution(z)]
    if case == "AIII":
        return [
            z
            for z in cx.twisted_involutions("star", "A", n)
            if len(cx.twist_set(z)) >= k
        ]
    if case == "BI":
        return [z for z in cx.involutions("BC", n) if len(cx.negate_set(z)) >= k]
    if case == "CI":
        return cx.involutions("BC", n)
    if case == "CII":
        return [
            z
            for z in cx.involutions("BC", n)
            if cx.is_fpf_involution(z) and len(cx.negate_set(z)) >= k
        ]
    if case == "DI":
        return [z for z in cx.involutions("D", n) if len(cx.negate_set(z)) >= k]
    if case == "DII":
        return [
            z
            for z in cx.twisted_involutions("diamond", "D", n)
            if len(cx.negate_set(left_t0(z))) >= k
        ]
    if case == "DIII":
        return [
            z
            for z in cx.involutions("D", n)
            if cx.is_fpf_involution(z)
            and (len(cx.negate_set(z)) > 0 or cx.ell0(z) % 4 == 0)
        ]
    # DIV: { z in W+_n : t_0 z is a fixed-point-free involution of W_n }
    return sorted(
        z
        for z in cx.twisted_involutions("diamond", "D", n)
        if cx.is_fpf_involution(left_t0(z))
    )


def in_rs_image(space: SymSpace, z: cx.WeylElement) -> bool:
    """Membership test for the image of psi, without enumeration."""
    case, n, k = space.case, space.n, space.k
    if z.kind != space.kind or z.rank != n:
        return False
    if case == "AIII":
        return cx.is_twisted_involution("star", z) and len(cx.twist_set(z)) >= k
    if case == "DII":
        return (
            cx.is_twisted_involution("diamond", z)
            and len(cx.negate_set(left_t0(z))) >= k
        )
    if case == "DIV":
        return cx.is_twisted_involution("diamond", z) and cx.is_fpf_involution(
            left_t0(z)
        )
    if z != cx.invert(z):
        return False
    if case == "AII":
        return cx.is_fpf_involution(z)
    if case in ("BI", "DI"):
        return len(cx.negate_set(z)) >= k
    if case == "CII":
        return cx.is_fpf_involution(z) and len(cx.negate_set(z)) >= k
    if case == "DIII":
        return cx.is_fpf_involution(z) and (
            len(cx.negate_set(z)) > 0 or cx.ell0(z) % 4 == 0
        )
    return True  # AI and CI take every involution


def dense_image(space: SymSpace) -> cx.WeylElement:
    """psi(gamma_dense) in closed form."""
    case, n, k = space.case, space.n, space.k
    if case == "AI":
        return cx.identity("A", n)
    if case == "AII":
        return cx.word_to_element("A", n, tuple(range(1, n + 1, 2)))
    if case == "AIII":
        return cx.named_element("A", n, "omega", k)
    if case == "BI":
        return cx.named_element("BC", n, "sigma", k)
    if case == "CI":
        return cx.identity("BC", n)
    if case == "CII":
        return cx.named_element("BC", n, "sigma_fpf", k)
    if case in ("DI", "DII"):
        return cx.named_element("D", n, "sigma_hat", k)
    if case == "DIII":
        return cx.word_to_element("D", n, tuple(range(1, n, 2)))
    return cx.word_to_element("D", n, tuple(range(2, n, 2)))
