"""Linear algebra over GF(2) on bit-packed Python integers."""

from __future__ import annotations

from typing import Iterable


class XorBasis:
    """Incremental row echelon basis keyed by leading bit.

    Each stored row remembers which input rows were combined to produce it
    (``combo``, another bitmask), so a solution can be read back.
    """

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: int, combo: int = 0) -> tuple[int, int]:
        while vec:
            top = vec.bit_length() - 1
            hit = self.rows.get(top)
            if hit is None:
                break
            vec ^= hit[0]
            combo ^= hit[1]
        return vec, combo

    def fully_reduce(self, vec: int, combo: int = 0) -> tuple[int, int]:
        """Reduce every bit that has a pivot, not just the leading one."""
        for top in sorted(self.rows, reverse=True):
            if vec >> top & 1:
                row, c = self.rows[top]
                vec ^= row
                combo ^= c
        return vec, combo

    def insert(self, vec: int, combo: int) -> bool:
        vec, combo = self.reduce(vec, combo)
        if not vec:
            return False
        self.rows[vec.bit_length() - 1] = (vec, combo)
        return True


def rank(rows: Iterable[int]) -> int:
    basis = XorBasis()
    for r in rows:
        basis.insert(r, 0)
    return len(basis)


def solve(rows: list[int], target: int) -> int | None:
    """Bitmask c over row indices with XOR of rows[k] (c_k = 1) equal to target, or None."""
    basis = XorBasis()
    for k, r in enumerate(rows):
        basis.insert(r, 1 << k)
    rest, combo = basis.fully_reduce(target)
    return None if rest else combo


def echelon(rows: list[int]) -> list[int]:
    """Reduced row echelon form (nonzero rows, leading bit descending)."""
    basis = XorBasis()
    for r in rows:
        basis.insert(r, 0)
    out = []
    for top in sorted(basis.rows, reverse=True):
        vec = basis.rows[top][0]
        for other in sorted(basis.rows, reverse=True):
            if other < top and vec >> other & 1:
                vec ^= basis.rows[other][0]
        out.append(vec)
    return out
