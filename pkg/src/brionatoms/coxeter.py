"""Exact arithmetic in the classical Weyl groups.

Three families are supported, each identified by a ``kind`` string:

* ``"A"``  -- the symmetric group S_{n+1} acting on [n+1], with simple
  generators t_1, ..., t_n where t_i = (i, i+1);
* ``"BC"`` -- the hyperoctahedral group W_n of signed permutations of
  [n], with generators t_0, ..., t_{n-1} where t_0 = (-1, 1) and
  t_i = (-i-1, -i)(i, i+1) for i >= 1;
* ``"D"``  -- the even-signed subgroup W+_n of W_n, with generators
  t_{-1}, t_1, ..., t_{n-1} where t_{-1} = (-2, 1)(-1, 2).

An element is stored as its one-line word (w(1), ..., w(m)); signed
kinds extend to negative arguments by w(-i) = -w(i).  Composition is
(u * v)(i) = u(v(i)).  Reduced words are recorded right-to-left: the
tuple (i_1, ..., i_m) denotes the product t_{i_m} ... t_{i_1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

KINDS = ("A", "BC", "D")

# Automorphism tags.  "star" is the type-A diagram flip w -> w0*w*w0;
# "diamond" is the type-D diagram flip w -> t0*w*t0.
AUTS = ("id", "star", "diamond")


def window(kind: str, rank: int) -> int:
    """Size of the one-line window: n+1 for kind A, n otherwise."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    return rank + 1 if kind == "A" else rank


@dataclass(frozen=True, order=True)
class WeylElement:
    """A permutation or signed permutation in one-line form."""

    kind: str
    oneline: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        m = len(self.oneline)
        if m < 1 + (self.kind == "A"):
            raise ValueError("one-line word too short")
        if sorted(abs(v) for v in self.oneline) != list(range(1, m + 1)):
            raise ValueError(f"not a (signed) permutation: {self.oneline}")
        if self.kind == "A" and any(v < 0 for v in self.oneline):
            raise ValueError(f"kind A requires positive entries: {self.oneline}")
        if self.kind == "D" and sum(v < 0 for v in self.oneline) % 2:
            raise ValueError(f"kind D requires evenly many negatives: {self.oneline}")

    @property
    def rank(self) -> int:
        return len(self.oneline) - 1 if self.kind == "A" else len(self.oneline)

    def __call__(self, i: int) -> int:
        """Evaluate w(i); signed kinds accept negative arguments."""
        if i > 0:
            return self.oneline[i - 1]
        if i < 0 and self.kind != "A":
            return -self.oneline[-i - 1]
        raise ValueError(f"argument {i} outside domain")

    def __repr__(self) -> str:
        return f"{self.kind}:[{','.join(str(v) for v in self.oneline)}]"


def identity(kind: str, rank: int) -> WeylElement:
    return WeylElement(kind, tuple(range(1, window(kind, rank) + 1)))


def generator_indices(kind: str, rank: int) -> tuple[int, ...]:
    """Valid simple-generator indices: {1..n} / {0..n-1} / {-1, 1..n-1}."""
    if kind == "A":
        return tuple(range(1, rank + 1))
    if kind == "BC":
        return tuple(range(rank))
    if rank == 1:
        return ()  # W+_1 is trivial
    return (-1,) + tuple(range(1, rank))


def simple(kind: str, rank: int, i: int) -> WeylElement:
    """The simple generator t_i as a one-line element."""
    if i not in generator_indices(kind, rank):
        raise ValueError(f"generator index {i} invalid for {kind} rank {rank}")
    line = list(range(1, window(kind, rank) + 1))
    if i == 0:
        line[0] = -1
    elif i == -1:
        line[0], line[1] = -2, -1
    else:
        line[i - 1], line[i] = line[i], line[i - 1]
    return WeylElement(kind, tuple(line))


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    """(u * v)(i) = u(v(i))."""
    if u.kind != v.kind or len(u.oneline) != len(v.oneline):
        raise ValueError(f"kind mismatch: {u!r} vs {v!r}")
    return WeylElement(u.kind, _compose_line(u.oneline, v.oneline))


def _compose_line(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(u[j - 1] if j > 0 else -u[-j - 1] for j in v)


def invert(u: WeylElement) -> WeylElement:
    line = [0] * len(u.oneline)
    for i, v in enumerate(u.oneline, start=1):
        if v > 0:
            line[v - 1] = i
        else:
            line[-v - 1] = -i
    return WeylElement(u.kind, tuple(line))


def inv(w: WeylElement) -> int:
    """Inversions of the one-line word over positive positions."""
    line = w.oneline
    return sum(line[i] > line[j] for i in range(len(line)) for j in range(i + 1, len(line)))


def inv_pm(w: WeylElement) -> int:
    """Inversions over the full signed domain [-n] + [n]."""
    dom = [w(i) for i in range(-len(w.oneline), 0)] + list(w.oneline)
    return sum(dom[i] > dom[j] for i in range(len(dom)) for j in range(i + 1, len(dom)))


def ell0(w: WeylElement) -> int:
    return sum(v < 0 for v in w.oneline)


def length(w: WeylElement) -> int:
    """Coxeter length: inv, (inv_pm + ell0)/2, or (inv_pm - ell0)/2."""
    if w.kind == "A":
        return inv(w)
    if w.kind == "BC":
        return (inv_pm(w) + ell0(w)) // 2
    return (inv_pm(w) - ell0(w)) // 2


def right_ascent(w: WeylElement, i: int) -> bool:
    """True iff l(w t_i) > l(w)."""
    if i == 0:
        return w.oneline[0] > 0
    if i == -1:
        return -w.oneline[1] < w.oneline[0]
    return w.oneline[i - 1] < w.oneline[i]


def right_descents(w: WeylElement) -> tuple[int, ...]:
    return tuple(i for i in generator_indices(w.kind, w.rank) if not right_ascent(w, i))


def mult_right(w: WeylElement, i: int) -> WeylElement:
    """w * t_i (acts on positions)."""
    line = list(w.oneline)
    if i == 0:
        line[0] = -line[0]
    elif i == -1:
        line[0], line[1] = -line[1], -line[0]
    else:
        line[i - 1], line[i] = line[i], line[i - 1]
    return WeylElement(w.kind, tuple(line))


def mult_left(i: int, w: WeylElement) -> WeylElement:
    """t_i * w (acts on values)."""
    if i == 0:
        swap = {1: -1, -1: 1}
    elif i == -1:
        swap = {1: -2, -2: 1, 2: -1, -1: 2}
    else:
        swap = {i: i + 1, i + 1: i, -i: -i - 1, -i - 1: -i}
    return WeylElement(w.kind, tuple(swap.get(v, v) for v in w.oneline))


def mult_right_word(w: WeylElement, word: Iterable[int]) -> WeylElement:
    # Raw-line loop: intermediate products may leave W+_n even when the
    # final result lands back inside it.
    line = list(w.oneline)
    for i in word:
        if i == 0:
            line[0] = -line[0]
        elif i == -1:
            line[0], line[1] = -line[1], -line[0]
        else:
            line[i - 1], line[i] = line[i], line[i - 1]
    return WeylElement(w.kind, tuple(line))


def word_to_element(kind: str, rank: int, word: Iterable[int]) -> WeylElement:
    """Product t_{i_m} ... t_{i_1} of the word (i_1, ..., i_m)."""
    w = identity(kind, rank)
    for i in word:
        w = mult_left(i, w)
    return w


def longest_element(kind: str, rank: int) -> WeylElement:
    m = window(kind, rank)
    if kind == "A":
        return WeylElement(kind, tuple(range(m, 0, -1)))
    if kind == "BC" or rank % 2 == 0:
        return WeylElement(kind, tuple(range(-1, -m - 1, -1)))
    # W+_n with n odd: w0 = (1, -2, -3, ..., -n)
    return WeylElement(kind, (1,) + tuple(range(-2, -m - 1, -1)))


def demazure(u: WeylElement, v: WeylElement) -> WeylElement:
    """Demazure product u o v (absorbs non-length-increasing letters)."""
    if u.kind != v.kind or len(u.oneline) != len(v.oneline):
        raise ValueError(f"kind mismatch: {u!r} vs {v!r}")
    # Peel right descents of v to get a word for v in product order, then
    # fold it onto u from the left end of that word.
    letters = []
    while True:
        des = right_descents(v)
        if not des:
            break
        letters.append(des[0])
        v = mult_right(v, des[0])
    for i in reversed(letters):
        if right_ascent(u, i):
            u = mult_right(u, i)
    return u


def valid_automorphism(theta: str, kind: str) -> bool:
    if theta == "id":
        return True
    return (theta, kind) in {("star", "A"), ("diamond", "D")}


def apply_automorphism(theta: str, w: WeylElement) -> WeylElement:
    if theta == "id":
        return w
    if theta == "star":
        if w.kind != "A":
            raise ValueError("star automorphism requires kind A")
        w0 = longest_element(w.kind, w.rank)
        return compose(w0, compose(w, w0))
    if theta == "diamond":
        if w.kind != "D":
            raise ValueError("diamond automorphism requires kind D")
        # t0-conjugation: negate the value of absolute size 1 and the
        # sign of the first entry.
        line = [-v if abs(v) == 1 else v for v in w.oneline]
        line[0] = -line[0]
        return WeylElement("D", tuple(line))
    raise ValueError(f"unknown automorphism {theta!r}")


def is_twisted_involution(theta: str, z: WeylElement) -> bool:
    return apply_automorphism(theta, z) == invert(z)


def demazure_conjugate(theta: str, z: WeylElement, i: int) -> WeylElement:
    """Theta(t_i) o z o t_i via the per-kind case analysis.

    Requires z to be a theta-twisted involution; matches the generic
    triple Demazure product (see tests).
    """
    if not valid_automorphism(theta, z.kind):
        raise ValueError(f"automorphism {theta!r} invalid for kind {z.kind}")
    if i not in generator_indices(z.kind, z.rank):
        raise ValueError(f"generator index {i} invalid for {z!r}")
    if not is_twisted_involution(theta, z):
        raise ValueError(f"{z!r} is not a {theta}-twisted involution")

    if z.kind == "A":
        n1 = len(z.oneline)
        a, b = z.oneline[i - 1], z.oneline[i]
        if theta == "id":
            if a == i and b == i + 1:
                return mult_right(z, i)
            if a > b:
                return z
            return mult_left(i, mult_right(z, i))
        if a == n1 - i and b == n1 + 1 - i:
            return mult_right(z, i)
        if a > b:
            return z
        return mult_left(n1 - i, mult_right(z, i))

    if i >= 0 and (theta == "id" or i > 1):
        # One formula covers BC, type D with i >= 1, and diamond with
        # i >= 2, using the convention z(0) = 0.
        a = z(i) if i > 0 else 0
        b = z(i + 1)
        if (a == i and b == i + 1) or (a == -i - 1 and b == -i):
            return mult_right(z, i)
        if a > b:
            return z
        return mult_left(i, mult_right(z, i))

    # In W_n the word t_0 t_1 t_0 multiplies out to t_{-1}, so the type-D
    # case formulas stay inside W+_n when phrased through t_{-1}.
    a, b = z.oneline[0], z.oneline[1]
    if theta == "id":
        # i == -1, z in I(W+_n)
        if (a == 1 and b == 2) or (a == 2 and b == 1):
            return mult_right(z, -1)
        if a == -1 and b == 2:
            return mult_right(mult_right(z, -1), 1)
        if a + b < 0:
            return z
        return compose(simple(z.kind, z.rank, -1), mult_right(z, -1))
    if i == 1:
        # diamond, t_1^d o z o t_1
        if (a == -1 and b == 2) or (a == -2 and b == 1):
            return mult_right(z, 1)
        if a == 1 and b == 2:
            return mult_right(mult_right(z, -1), 1)
        if a > b:
            return z
        return compose(simple(z.kind, z.rank, -1), mult_right(z, 1))
    # diamond, t_{-1}^d o z o t_{-1}
    if (a == -1 and b == 2) or (a == 2 and b == -1):
        return mult_right(z, -1)
    if a == 1 and b == 2:
        return mult_right(mult_right(z, -1), 1)
    if a + b < 0:
        return z
    return compose(simple(z.kind, z.rank, 1), mult_right(z, -1))


def demazure_conjugate_generic(theta: str, z: WeylElement, i: int) -> WeylElement:
    """Theta(t_i) o z o t_i as a literal triple Demazure product."""
    s = simple(z.kind, z.rank, i)
    return demazure(demazure(apply_automorphism(theta, s), z), s)


# ---------------------------------------------------------------------------
# permutation statistics and named elements

def twist_set(w: WeylElement) -> frozenset[int]:
    """{ i : w(i) + i = n + 2 } for w in S_{n+1}."""
    if w.kind != "A":
        raise ValueError("twist is a kind-A statistic")
    m = len(w.oneline)
    return frozenset(i for i in range(1, m + 1) if w(i) + i == m + 1)


def fix_set(w: WeylElement) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w.oneline) + 1) if w(i) == i)


def negate_set(w: WeylElement) -> frozenset[int]:
    if w.kind == "A":
        raise ValueError("negate is a signed-kind statistic")
    return frozenset(i for i in range(1, len(w.oneline) + 1) if w(i) == -i)


def perm_stats(w: WeylElement) -> dict:
    stats = {
        "FixSet": fix_set(w),
        "inv": inv(w),
        "length": length(w),
    }
    if w.kind == "A":
        stats["TwistSet"] = twist_set(w)
        stats["twist"] = len(stats["TwistSet"])
    else:
        stats["NegateSet"] = negate_set(w)
        stats["neg"] = len(stats["NegateSet"])
        stats["ell0"] = ell0(w)
        stats["inv_pm"] = inv_pm(w)
    return stats


def is_fpf_involution(w: WeylElement) -> bool:
    """Involution whose fixed points avoid the positive window."""
    return w == invert(w) and not fix_set(w)


def bar_negate(w: WeylElement) -> WeylElement:
    """The map i -> -w(i); result is returned in BC layout."""
    if w.kind == "A":
        raise ValueError("bar requires a signed kind")
    return WeylElement("BC", tuple(-v for v in w.oneline))


def as_kind(w: WeylElement, kind: str) -> WeylElement:
    """Reinterpret a signed element in another signed layout."""
    if kind == w.kind:
        return w
    if "A" in (kind, w.kind):
        raise ValueError("cannot convert between kind A and signed kinds")
    return WeylElement(kind, w.oneline)


def es_normalize(word: tuple[int, ...]) -> tuple[int, ...]:
    """Of the word and its first-letter negation, the one with evenly
    many negative letters."""
    if not word:
        return word
    if sum(v < 0 for v in word) % 2 == 0:
        return tuple(word)
    return (-word[0],) + tuple(word[1:])


def named_element(kind: str, rank: int, name: str, k: Optional[int] = None) -> WeylElement:
    """Named elements: w0, omega(k), sigma(k), sigma_hat(k),
    sigma_fpf(k), upsilon0, upsilon0_plus."""
    m = window(kind, rank)
    if name == "w0":
        return longest_element(kind, rank)
    if name == "omega":
        # omega_k^m in S_m: fixes the first i and last m-j+1 positions,
        # reverses the middle; empty product when k <= 1.
        if kind != "A":
            raise ValueError("omega lives in kind A")
        if k is None or not 0 <= k <= m or (m - k) % 2:
            raise ValueError(f"omega_k^m needs 0 <= k <= m with m-k even, got k={k}, m={m}")
        i = (m - k) // 2
        line = list(range(1, m + 1))
        r = 1
        while i + r <= m // 2:
            a, b = i + r, m + 1 - i - r
            line[a - 1], line[b - 1] = line[b - 1], line[a - 1]
            r += 1
        return WeylElement(kind, tuple(line))
    if name in ("sigma", "sigma_hat", "sigma_fpf"):
        if kind == "A":
            raise ValueError(f"{name} lives in a signed kind")
        if k is None or not 0 <= k <= m:
            raise ValueError(f"need 0 <= k <= n, got k={k}")
        line = [-i if i <= k else i for i in range(1, m + 1)]
        if name == "sigma_hat":
            if k % 2:
                line[0] = 1
            return WeylElement("D", tuple(line))
        if name == "sigma_fpf":
            if (m - k) % 2:
                raise ValueError(f"sigma_fpf needs n-k even, got k={k}, n={m}")
            for j in range(k, m - 1, 2):
                line[j], line[j + 1] = line[j + 1], line[j]
        return WeylElement(kind, tuple(line))
    if name == "upsilon0":
        if kind != "BC":
            raise ValueError("upsilon0 lives in W_n")
        return WeylElement(kind, _upsilon_line(m))
    if name == "upsilon0_plus":
        if kind != "D":
            raise ValueError("upsilon0_plus lives in W+_n")
        line = list(_upsilon_line(m))
        if m % 2 == 1:
            line[1] = 1
        elif m % 4 == 2:
            line[0], line[1] = -line[0], -line[1]
        return WeylElement(kind, tuple(line))
    raise ValueError(f"unknown named element {name!r}")


def _upsilon_line(n: int) -> tuple[int, ...]:
    """(-2, -1, -4, -3, ...) with a trailing -n when n is odd."""
    line = []
    for a in range(1, n - n % 2, 2):
        line += [-a - 1, -a]
    if n % 2:
        line.append(-n)
    return tuple(line)


# ---------------------------------------------------------------------------
# enumeration

_BIG_ORDER = 10_000


def group_order(kind: str, rank: int) -> int:
    m = window(kind, rank)
    order = 1
    for j in range(2, m + 1):
        order *= j
    if kind == "BC":
        order <<= m
    elif kind == "D":
        order <<= m - 1
    return order


def elements(kind: str, rank: int, big: bool = False) -> list[WeylElement]:
    """All group elements, sorted by one-line word.

    Exhaustive enumeration is capped at rank 6 for signed kinds (rank 7
    for kind A); orders above 10^4 additionally require big=True.
    """
    cap = 7 if kind == "A" else 6
    if rank > cap:
        raise ValueError(f"enumeration capped at rank {cap} for kind {kind}")
    if group_order(kind, rank) > _BIG_ORDER and not big:
        raise ValueError(f"group of order {group_order(kind, rank)} needs big=True")
    m = window(kind, rank)
    out = []
    for perm in itertools.permutations(range(1, m + 1)):
        if kind == "A":
            out.append(WeylElement(kind, perm))
            continue
        for signs in itertools.product((1, -1), repeat=m):
            if kind == "D" and signs.count(-1) % 2:
                continue
            out.append(WeylElement(kind, tuple(s * v for s, v in zip(signs, perm))))
    out.sort()
    return out


def twisted_involutions(theta: str, kind: str, rank: int) -> list[WeylElement]:
    """I_theta(W), generated by Demazure conjugation from the identity."""
    if not valid_automorphism(theta, kind):
        raise ValueError(f"automorphism {theta!r} invalid for kind {kind}")
    seen = {identity(kind, rank)}
    frontier = list(seen)
    gens = generator_indices(kind, rank)
    while frontier:
        nxt = []
        for z in frontier:
            for i in gens:
                y = demazure_conjugate(theta, z, i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def involutions(kind: str, rank: int) -> list[WeylElement]:
    return twisted_involutions("id", kind, rank)


def reduced_words(w: WeylElement, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """All reduced words of w, right-to-left convention; with limit,
    at most that many (depth-first)."""
    out: list[tuple[int, ...]] = []
    _reduced_words_into(w, (), out, limit)
    return out


def _reduced_words_into(
    w: WeylElement, prefix: tuple[int, ...], out: list, limit: Optional[int]
) -> None:
    des = right_descents(w)
    if not des:
        out.append(prefix)
        return
    for i in des:
        if limit is not None and len(out) >= limit:
            return
        _reduced_words_into(mult_right(w, i), prefix + (i,), out, limit)


def any_reduced_word(w: WeylElement) -> tuple[int, ...]:
    word = []
    while True:
        des = right_descents(w)
        if not des:
            return tuple(word)
        word.append(des[0])
        w = mult_right(w, des[0])


def parse_element(text: str) -> WeylElement:
    """Parse "KIND:[v1,v2,...]" or a bare "[v1,v2,...]" (kind A)."""
    text = text.strip()
    kind = "A"
    if ":" in text:
        kind, text = text.split(":", 1)
        kind = kind.strip()
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed one-line literal {text!r}")
    entries = tuple(int(v) for v in body[1:-1].split(",") if v.strip())
    return WeylElement(kind, entries)
