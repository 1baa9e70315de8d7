"""Braid words, Garside normal form and the moves used on transverse braids.

A letter ``j > 0`` is sigma_j, ``j < 0`` is sigma_|j|^-1; sigma_j is a
positive crossing between positions j and j+1.  Words are abstract group
elements; only the drawing code (``grid_to_braid``, ``braid_to_grid``,
``planar.braid_closure``) fixes a picture, and it counts positions from the
right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .grid import FrontData, GridDiagram, MultiComponent, diagonal_mirror, validate


class BraidError(ValueError):
    pass


class StrandMismatch(BraidError):
    pass


class OutOfRange(BraidError):
    pass


class PatternMismatch(BraidError):
    pass


class ForbiddenSubgroupLetter(BraidError):
    pass


class NotDestabilizable(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(j) for j in self.letters))
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        for j in self.letters:
            if j == 0 or abs(j) >= self.strands:
                raise OutOfRange(f"letter {j} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise StrandMismatch(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-j for j in reversed(self.letters)))

    @property
    def writhe(self) -> int:
        return sum(1 if j > 0 else -1 for j in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[k] = final position of the strand starting at position k (0-based)."""
        where = list(range(self.strands))  # where[pos] = strand at pos
        for j in self.letters:
            i = abs(j) - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        perm = [0] * self.strands
        for pos, s in enumerate(where):
            perm[s] = pos
        return tuple(perm)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = set()
        count = 0
        for s in range(self.strands):
            if s in seen:
                continue
            count += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
        return count

    def __str__(self) -> str:
        return f"{self.strands} | " + " ".join(str(j) for j in self.letters)

    def sigma_string(self) -> str:
        """Exponent shorthand, e.g. ``s3 s2^-2 s3^2``."""
        out = []
        for j, run in _runs(self.letters):
            e = run if j > 0 else -run
            out.append(f"s{abs(j)}" + (f"^{e}" if e != 1 else ""))
        return " ".join(out) if out else "1"

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Parse ``"4 | 3 -2 -2"`` or ``"s3 s2^-2 ..."`` (strands then required or inferred)."""
        text = text.strip()
        piped = "|" in text
        if piped:
            head, body = text.split("|", 1)
            strands = int(head)
        else:
            body = text
        letters: list[int] = []
        for tok in body.replace(",", " ").split():
            m = re.fullmatch(r"[sS](\d+)(?:\^(-?\d+))?", tok)
            if m:
                g = int(m.group(1))
                e = int(m.group(2)) if m.group(2) else 1
                letters.extend([g if e > 0 else -g] * abs(e))
            elif tok == "e" or (tok == "1" and not piped):
                continue  # identity
            else:
                letters.append(int(tok))
        if strands is None:
            strands = max((abs(j) for j in letters), default=0) + 1
        return cls(strands, tuple(letters))


def _runs(letters: Sequence[int]):
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        yield letters[i], j - i
        i = j


def word(strands: int, *blocks: tuple[int, int]) -> BraidWord:
    """Build a word from (generator, exponent) blocks, e.g. word(4, (3, 1), (2, -2))."""
    letters: list[int] = []
    for g, e in blocks:
        letters.extend([g if e > 0 else -g] * abs(e))
    return BraidWord(strands, tuple(letters))


# -- Garside normal form ------------------------------------------------------
#
# Simple braids are permutation braids.  A permutation p is a tuple in
# one-line notation, composition (p*q)(k) = p(q(k)); the braid product a.b
# corresponds to p_a * p_b.


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[k] for k in q)


def _transposition(n: int, i: int) -> tuple[int, ...]:
    t = list(range(n))
    t[i], t[i + 1] = t[i + 1], t[i]
    return tuple(t)


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def _right_descents(p: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


def _left_descents(p: tuple[int, ...]) -> frozenset[int]:
    return _right_descents(_inverse(p))


@lru_cache(maxsize=None)
def _delta(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by the half twist."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    inf: int
    factors: tuple[tuple[int, ...], ...]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def to_json(self) -> dict:
        return {"strands": self.strands, "inf": self.inf, "factors": [list(f) for f in self.factors]}

    def __str__(self) -> str:
        fs = " ".join("[" + ",".join(str(v + 1) for v in f) + "]" for f in self.factors)
        return f"D^{self.inf} {fs}".strip()


def _normalize_pair(a, b):
    while True:
        extra = _left_descents(b) - _right_descents(a)
        if not extra:
            return a, b
        i = min(extra)
        t = _transposition(len(a), i)
        a = _compose(a, t)
        b = _compose(t, b)


def normal_form(B: BraidWord) -> GarsideNormalForm:
    """Left-greedy Garside normal form Delta^inf x_1 ... x_k."""
    n = B.strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    delta = _delta(n)
    ident = tuple(range(n))
    # sigma_i^-1 = (s_i * Delta) Delta^-1; every Delta^-1 moves to the front,
    # applying tau to each simple it passes
    negatives_after = []
    count = 0
    for j in reversed(B.letters):
        negatives_after.append(count)
        if j < 0:
            count += 1
    negatives_after.reverse()
    simples = []
    for j, after in zip(B.letters, negatives_after):
        t = _transposition(n, abs(j) - 1)
        s = t if j > 0 else _compose(t, delta)
        flips = after + (1 if j < 0 else 0)
        if flips % 2:
            s = _tau(s)
        simples.append(s)
    inf = -count
    factors = simples
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 2, -1, -1):
            a, b = _normalize_pair(factors[k], factors[k + 1])
            if (a, b) != (factors[k], factors[k + 1]):
                factors[k], factors[k + 1] = a, b
                changed = True
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return GarsideNormalForm(n, inf, tuple(factors))


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    if b1.strands != b2.strands:
        raise StrandMismatch(f"{b1.strands} vs {b2.strands} strands")
    return normal_form(b1) == normal_form(b2)


def simple_word(p: tuple[int, ...]) -> list[int]:
    """A positive word for the permutation braid of p (bubble sort)."""
    p = list(p)
    out = []
    # peel right descents: p = p' * s_i
    while True:
        d = [i for i in range(len(p) - 1) if p[i] > p[i + 1]]
        if not d:
            break
        i = d[0]
        p[i], p[i + 1] = p[i + 1], p[i]
        out.append(i + 1)
    return list(reversed(out))


def normal_form_word(nf: GarsideNormalForm) -> BraidWord:
    n = nf.strands
    letters: list[int] = []
    dw = simple_word(_delta(n))
    if nf.inf >= 0:
        letters.extend(dw * nf.inf)
    else:
        inv = [-j for j in reversed(dw)]
        letters.extend(inv * -nf.inf)
    for f in nf.factors:
        letters.extend(simple_word(f))
    return BraidWord(n, tuple(letters))


# -- moves -------------------------------------------------------------------


def sl(B: BraidWord) -> int:
    """Self-linking number of the transverse closure: writhe minus strands."""
    return B.writhe - B.strands


def conjugate(B: BraidWord, k: int) -> BraidWord:
    """sigma_k B sigma_k^-1 (k may be negative)."""
    if k == 0 or abs(k) >= B.strands:
        raise OutOfRange(f"generator {k} out of range for {B.strands} strands")
    return BraidWord(B.strands, (k,) + B.letters + (-k,))


def free_reduce(B: BraidWord) -> BraidWord:
    out: list[int] = []
    for j in B.letters:
        if out and out[-1] == -j:
            out.pop()
        else:
            out.append(j)
    return BraidWord(B.strands, tuple(out))


_EXCHANGE_SUBGROUP = {1: {2, 3}, 3: {1, 2}}


def exchange_sites(B: BraidWord, gen: int) -> list[tuple[int, int]]:
    """All (i, j) where B = b1 s^e b2 s^-e b3 with the b's avoiding sigma_gen."""
    if B.strands != 4 or gen not in _EXCHANGE_SUBGROUP:
        return []
    allowed = _EXCHANGE_SUBGROUP[gen]
    if any(abs(j) not in allowed and abs(j) != gen for j in B.letters):
        return []
    idx = [i for i, j in enumerate(B.letters) if abs(j) == gen]
    if len(idx) != 2:
        return []
    i, j = idx
    if B.letters[i] != -B.letters[j]:
        return []
    return [(i, j)]


def exchange_move(B: BraidWord, site: tuple[int, int], gen: int) -> BraidWord:
    """Flip the signs of the two sigma_gen letters at ``site`` (sigma_1 or sigma_3 exchange)."""
    if B.strands != 4 or gen not in _EXCHANGE_SUBGROUP:
        raise PatternMismatch("exchange moves are defined for sigma_1 / sigma_3 on 4-braids")
    i, j = site
    if not 0 <= i < j < len(B.letters):
        raise PatternMismatch(f"bad site {site}")
    li, lj = B.letters[i], B.letters[j]
    if abs(li) != gen or abs(lj) != gen or li != -lj:
        raise PatternMismatch(f"letters at {site} are not sigma_{gen}^(+-1) with opposite signs")
    allowed = _EXCHANGE_SUBGROUP[gen]
    for k, l in enumerate(B.letters):
        if k in (i, j):
            continue
        if abs(l) not in allowed:
            raise ForbiddenSubgroupLetter(f"letter {l} at {k} is not in the subgroup generated by {sorted(allowed)}")
    letters = list(B.letters)
    letters[i], letters[j] = -li, -lj
    return BraidWord(4, tuple(letters))


def markov_stabilize(B: BraidWord) -> BraidWord:
    return BraidWord(B.strands + 1, B.letters + (B.strands,))


def markov_destabilize(B: BraidWord) -> BraidWord:
    n = B.strands
    top = n - 1
    idx = [i for i, j in enumerate(B.letters) if abs(j) == top]
    if n < 2 or len(idx) != 1 or B.letters[idx[0]] != top:
        raise NotDestabilizable(f"need exactly one positive sigma_{top}")
    i = idx[0]
    rotated = B.letters[i + 1:] + B.letters[:i]
    return BraidWord(n - 1, rotated)


# -- grids and fronts --------------------------------------------------------


def grid_to_braid(G: GridDiagram) -> BraidWord:
    """B(G): make vertical arcs point up and read the braid bottom to top.

    Columns whose X lies above the O carry a strand through the bottom and
    top edges.  Each row's horizontal O -> X arc passes over the strands
    it meets.  Strand positions are numbered right to left, so sigma_i
    swaps the strands at positions i and i + 1 counted from the right; a
    rightward pass emits a positive letter, a leftward one a negative.
    """
    validate(G)
    n = G.n
    active = [G.X[c] > G.O[c] for c in range(n)]  # columns carrying a strand at row 1/2
    m = sum(active)
    letters = []
    for r in range(1, n + 1):
        co, cx = G.o_col(r) - 1, G.x_col(r) - 1
        # position of the moving strand among active columns
        p = sum(active[:co])
        if cx > co:
            crossed = sum(active[co + 1:cx])
            letters.extend(m - 1 - p - t for t in range(crossed))
        else:
            crossed = sum(active[cx + 1:co])
            letters.extend(-(m - p + t) for t in range(crossed))
        active[co] = False
        active[cx] = True
    return BraidWord(max(m, 1), tuple(letters))


def bprime(G: GridDiagram) -> BraidWord:
    """B'(G), the braid of the diagonal mirror."""
    return grid_to_braid(diagonal_mirror(G))


def braid_to_grid(B: BraidWord) -> GridDiagram:
    """A grid diagram G with B(G) equal to B as a word.

    Every strand jogs once at the bottom and once at the top, so each
    column carries both markings; each letter adds one row and one column.
    """
    n = B.strands
    # column objects: ("P", j) wraps through the bottom/top edges for position j
    order_mid: list = []
    rows: list[tuple] = []  # (o_column_object, x_column_object) per row, bottom to top
    col_at = [("P", j) for j in range(n)]
    counter = 0

    def fresh():
        nonlocal counter
        counter += 1
        return ("N", counter)

    # bottom jogs, positions n-1 .. 0, each moving right into a new column
    jog_cols = [None] * n
    for j in range(n - 1, -1, -1):
        c = fresh()
        jog_cols[j] = c
        rows.append((col_at[j], c))
        col_at[j] = c
    order_mid.extend(jog_cols)
    for letter in B.letters:
        i = n - 1 - abs(letter)  # left-to-right index of the left strand
        c = fresh()
        if letter > 0:
            # strand at i moves right, over the strand at i+1
            order_mid.insert(order_mid.index(col_at[i + 1]) + 1, c)
            rows.append((col_at[i], c))
            col_at[i], col_at[i + 1] = col_at[i + 1], c
        else:
            # strand at i+1 moves left, over the strand at i
            order_mid.insert(order_mid.index(col_at[i]), c)
            rows.append((col_at[i + 1], c))
            col_at[i], col_at[i + 1] = c, col_at[i]
    # top jogs, positions 0 .. n-1, moving left back into the wrap columns
    for j in range(n):
        rows.append((col_at[j], ("P", j)))
    order = [("P", j) for j in range(n)] + order_mid
    index = {c: k + 1 for k, c in enumerate(order)}
    size = len(order)
    X = [0] * size
    O = [0] * size
    for r, (oc, xc) in enumerate(rows, 1):
        O[index[oc] - 1] = r
        X[index[xc] - 1] = r
    G = GridDiagram(X, O)
    validate(G)
    return G


def front_from_braid(B: BraidWord) -> FrontData:
    """Front L(B): positive crossings drawn as is, each negative one with a zigzag.

    Each strand's closing arc adds one up and one down cusp; a zigzag adds
    two up cusps.
    """
    if B.closure_components() != 1:
        raise MultiComponent(f"closure of {B} has {B.closure_components()} components")
    neg = sum(1 for j in B.letters if j < 0)
    return FrontData(B.writhe, B.strands + 2 * neg, B.strands)


def count_descending_negative_pairs(B: BraidWord) -> int:
    """Occurrences of sigma_i^-1 sigma_(i+1)^-1 as consecutive letters."""
    return sum(1 for a, b in zip(B.letters, B.letters[1:]) if a < 0 and b == a - 1)


def letter_count(blocks: Iterable[tuple[int, int]]) -> int:
    return sum(abs(e) for _, e in blocks)
