"""Sparse Laurent polynomials with integer and Gaussian-integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

VARS = ("x", "z")


class LaurentPoly:
    """Integer Laurent polynomial in the variables ``VARS[:nvars]``.

    Stored as ``{exponent tuple: nonzero int}``.  Instances are treated as
    immutable.
    """

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, nvars: int = 2):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def const(cls, c: int, nvars: int = 2) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Iterable[int], c: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls({exps: c}, len(exps))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out, self.nvars)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self.terms.items()}, self.nvars)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.terms.items()}, self.nvars)
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            raise ValueError("negative powers only for monomials; use shift()")
        out = LaurentPoly.const(1, self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, *exps: int) -> "LaurentPoly":
        """Multiply by the monomial with the given exponents."""
        return LaurentPoly(
            {tuple(a + b for a, b in zip(k, exps)): v for k, v in self.terms.items()},
            self.nvars,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def exponents(self, var: int) -> set[int]:
        return {k[var] for k in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: tuple(reversed(k))):
            mono = [str(self.terms[k])]
            for name, e in zip(VARS, k):
                if e:
                    mono.append(f"{name}^{e}")
            parts.append("*".join(mono))
        return " + ".join(parts)

    __repr__ = __str__

    _TERM = re.compile(r"^([+-]?\d+)((?:\*[a-z]\^-?\d+)*)$")

    @classmethod
    def parse(cls, text: str, nvars: int = 2) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls({}, nvars)
        out: dict[tuple[int, ...], int] = {}
        for chunk in re.split(r"\s+\+\s+", text):
            m = cls._TERM.match(chunk.replace(" ", ""))
            if not m:
                raise ValueError(f"cannot parse monomial {chunk!r}")
            exps = [0] * nvars
            for name, e in re.findall(r"\*([a-z])\^(-?\d+)", m.group(2)):
                exps[VARS.index(name)] = int(e)
            k = tuple(exps)
            out[k] = out.get(k, 0) + int(m.group(1))
        return cls(out, nvars)

    def to_json(self) -> list[list[int]]:
        return [list(k) + [self.terms[k]] for k in sorted(self.terms)]


def x_poly(coeffs: Mapping[int, int]) -> LaurentPoly:
    """One-variable Laurent polynomial in x from {exponent: coeff}."""
    return LaurentPoly({(e,): c for e, c in coeffs.items()}, 1)


class GaussLaurentPoly:
    """Laurent polynomial in x with Gaussian-integer coefficients (re, im)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, tuple[int, int]] | None = None):
        self.terms = {e: (re_, im) for e, (re_, im) in (terms or {}).items() if re_ or im}

    @classmethod
    def from_real(cls, p: LaurentPoly) -> "GaussLaurentPoly":
        return cls({k[0]: (v, 0) for k, v in p.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussLaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_real(self) -> bool:
        return all(im == 0 for _, im in self.terms.values())

    def is_imaginary(self) -> bool:
        return all(re_ == 0 for re_, _ in self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            re_, im = self.terms[e]
            if im == 0:
                c = str(re_)
            elif re_ == 0:
                c = f"{im}i"
            else:
                c = f"({re_}{im:+d}i)"
            parts.append(f"{c}*x^{e}" if e else c)
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list[list[int]]:
        return [[e, *self.terms[e]] for e in sorted(self.terms)]
