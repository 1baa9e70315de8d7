"""Oriented link diagrams stored as signed Gauss data.

Crossing ``k`` has two passages: ``2k`` (the under-strand) and ``2k + 1``
(the over-strand).  ``succ[p]`` is the next passage met when walking the
link along its orientation.  Components without crossings are counted in
``free_loops``.  The planar embedding is implicit: every diagram here comes
from a real projection, and smoothing or switching crossings keeps it real.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PlanarDiagram:
    succ: tuple[int, ...]
    signs: tuple[int, ...]
    free_loops: int = 0

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], signs: Sequence[int], free_loops: int = 0):
        succ = [-1] * (2 * len(signs))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                succ[a] = b
        if -1 in succ:
            raise ValueError("every crossing needs both passages on some cycle")
        return cls(tuple(succ), tuple(signs), free_loops)

    @property
    def crossings(self) -> int:
        return len(self.signs)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def pred(self) -> list[int]:
        pred = [0] * len(self.succ)
        for p, q in enumerate(self.succ):
            pred[q] = p
        return pred

    def cycles(self) -> list[list[int]]:
        seen = [False] * len(self.succ)
        out = []
        for start in range(len(self.succ)):
            if seen[start]:
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p)
                p = self.succ[p]
            out.append(cyc)
        return out

    @property
    def components(self) -> int:
        return len(self.cycles()) + self.free_loops

    def to_pd(self) -> list[tuple[str, int, int, int, int]]:
        """PD-style crossings (sign, a, b, c, d) with arc labels.

        Arcs are labelled by the passage they leave; the tuple lists the
        incident arc ends counterclockwise starting from the incoming
        under-arc.
        """
        pred = self.pred()
        out = []
        for k, s in enumerate(self.signs):
            u, o = 2 * k, 2 * k + 1
            under_in, under_out = pred[u], u
            over_in, over_out = pred[o], o
            if s > 0:
                out.append(("+", under_in, over_out, under_out, over_in))
            else:
                out.append(("-", under_in, over_in, under_out, over_out))
        return out

    # -- local operations ------------------------------------------------

    def switch(self, k: int) -> "PlanarDiagram":
        """Change crossing k from over to under (sign flips)."""
        u, o = 2 * k, 2 * k + 1

        def sw(p: int) -> int:
            return o if p == u else u if p == o else p

        succ = list(self.succ)
        new = [sw(succ[sw(p)]) for p in range(len(succ))]
        signs = list(self.signs)
        signs[k] = -signs[k]
        return PlanarDiagram(tuple(new), tuple(signs), self.free_loops)

    def smooth(self, k: int) -> "PlanarDiagram":
        """Oriented resolution of crossing k."""
        u, o = 2 * k, 2 * k + 1
        succ = list(self.succ)
        succ[u], succ[o] = succ[o], succ[u]
        return PlanarDiagram(tuple(succ), self.signs, self.free_loops)._drop({k})

    def remove(self, ks) -> "PlanarDiagram":
        """Delete crossings, keeping the arcs through them (R1/R2 removal)."""
        return self._drop(set(ks))

    def _drop(self, ks: set[int]) -> "PlanarDiagram":
        keep = [k for k in range(len(self.signs)) if k not in ks]
        newk = {k: i for i, k in enumerate(keep)}
        dropped = set()
        for k in ks:
            dropped.add(2 * k)
            dropped.add(2 * k + 1)

        def relabel(p: int) -> int:
            return 2 * newk[p // 2] + (p & 1)

        succ = [0] * (2 * len(keep))
        for p in range(len(self.succ)):
            if p in dropped:
                continue
            q = self.succ[p]
            while q in dropped:
                q = self.succ[q]
            succ[relabel(p)] = relabel(q)
        # cycles made only of dropped passages become free loops
        free = self.free_loops
        seen = set()
        for p in dropped:
            if p in seen:
                continue
            q = p
            only_dropped = True
            while q not in seen:
                seen.add(q)
                if q not in dropped:
                    only_dropped = False
                q = self.succ[q]
            if only_dropped and q == p:
                free += 1
        return PlanarDiagram(tuple(succ), tuple(self.signs[k] for k in keep), free)

    # -- simplification --------------------------------------------------

    def find_r1(self) -> int | None:
        for k in range(len(self.signs)):
            if self.succ[2 * k] == 2 * k + 1 or self.succ[2 * k + 1] == 2 * k:
                return k
        return None

    def find_r2(self) -> tuple[int, int] | None:
        for k1 in range(len(self.signs)):
            o2 = self.succ[2 * k1 + 1]
            if not o2 & 1:
                continue
            k2 = o2 // 2
            if k2 == k1 or self.signs[k1] == self.signs[k2]:
                continue
            if self.succ[2 * k1] == 2 * k2 or self.succ[2 * k2] == 2 * k1:
                return k1, k2
        return None

    def simplify(self) -> "PlanarDiagram":
        d = self
        while True:
            k = d.find_r1()
            if k is not None:
                d = d.remove({k})
                continue
            pair = d.find_r2()
            if pair is not None:
                d = d.remove(set(pair))
                continue
            return d

    # -- structure -------------------------------------------------------

    def split(self) -> list["PlanarDiagram"]:
        """Split into pieces with no crossings between them (free loops dropped)."""
        n = len(self.signs)
        if n == 0:
            return []
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for cyc in self.cycles():
            ks = [p // 2 for p in cyc]
            for k in ks[1:]:
                ra, rb = find(ks[0]), find(k)
                if ra != rb:
                    parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for k in range(n):
            groups.setdefault(find(k), []).append(k)
        if len(groups) == 1:
            return [PlanarDiagram(self.succ, self.signs, 0)]
        pieces = []
        for ks in groups.values():
            others = set(range(n)) - set(ks)
            piece = self._drop(others)
            pieces.append(PlanarDiagram(piece.succ, piece.signs, 0))
        return pieces

    def canonical_code(self) -> tuple:
        """Relabelling-invariant code of a connected diagram (free loops ignored)."""
        n2 = len(self.succ)
        if n2 == 0:
            return ()
        comp_of = [0] * n2
        cycles = self.cycles()
        for i, cyc in enumerate(cycles):
            for p in cyc:
                comp_of[p] = i
        best = None
        for start in range(n2):
            code = self._code_from(start, cycles, comp_of)
            if best is None or code < best:
                best = code
        return best

    def _code_from(self, start: int, cycles, comp_of) -> tuple:
        label: dict[int, int] = {}
        order: list[int] = []
        done_comps = set()
        code: list[int] = []
        p0 = start
        while True:
            done_comps.add(comp_of[p0])
            p = p0
            while True:
                k = p >> 1
                if k not in label:
                    label[k] = len(order)
                    order.append(k)
                code.append(label[k] * 4 + (p & 1) * 2 + (self.signs[k] > 0))
                p = self.succ[p]
                if p == p0:
                    break
            code.append(-1)
            if len(done_comps) == len(cycles):
                return tuple(code)
            p0 = None
            for k in order:
                for q in (2 * k, 2 * k + 1):
                    if comp_of[q] not in done_comps:
                        p0 = q
                        break
                if p0 is not None:
                    break
            if p0 is None:
                raise ValueError("canonical_code needs a connected diagram")


def braid_closure(strands: int, letters: Sequence[int]) -> PlanarDiagram:
    """Closure of a braid word; sigma_i (i > 0) is a positive crossing.

    Positions are numbered right to left, so sigma_i acts on the strands at
    left-to-right indices strands-1-i and strands-i.  For sigma_i the left
    one passes over, moving right; for sigma_i^-1 the right one passes
    over, moving left.
    """
    # tokens: passages 0..2L-1, then start markers 2L + j
    L = len(letters)
    base = 2 * L
    succ: dict[int, int] = {}
    last = [base + j for j in range(strands)]
    signs = []
    for k, letter in enumerate(letters):
        i = strands - 1 - abs(letter)
        if not 0 <= i < strands - 1:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        left, right = last[i], last[i + 1]
        if letter > 0:
            over_from, under_from = left, right
        else:
            over_from, under_from = right, left
        succ[over_from] = 2 * k + 1
        succ[under_from] = 2 * k
        signs.append(1 if letter > 0 else -1)
        # over and under strands swap positions
        if letter > 0:
            last[i], last[i + 1] = 2 * k, 2 * k + 1
        else:
            last[i], last[i + 1] = 2 * k + 1, 2 * k
    for j in range(strands):
        succ[last[j]] = base + j
    # contract start markers
    free = 0
    final = [0] * base
    for p in range(base):
        q = succ[p]
        while q >= base:
            q = succ[q]
        final[p] = q
    seen = set()
    for j in range(strands):
        m = base + j
        if m in seen:
            continue
        q = m
        only_markers = True
        while True:
            seen.add(q)
            q = succ[q]
            if q < base:
                only_markers = False
                break
            if q == m:
                break
        if only_markers:
            free += 1
    return PlanarDiagram(tuple(final), tuple(signs), free)
