"""
Multivariate polynomials with integer coefficients.

A polynomial is a sorted tuple of (exponent tuple, coefficient) pairs
in graded lexicographic order, highest term first, so equal
polynomials compare equal and printing is canonical.  Only the exact
operations needed for cohomology presentations are provided: ring
arithmetic, substitution, homogeneous components and display.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def _grlex_key(mono: Monomial) -> tuple:
    return (sum(mono), mono)


def _normalize(nvars: int, terms: Mapping[Monomial, int]) -> tuple[tuple[Monomial, int], ...]:
    cleaned = {m: c for m, c in terms.items() if c}
    for m in cleaned:
        if len(m) != nvars:
            raise ValueError(f"monomial {m} does not have {nvars} exponents")
    return tuple(
        (m, cleaned[m]) for m in sorted(cleaned, key=_grlex_key, reverse=True)
    )


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    terms: tuple[tuple[Monomial, int], ...]

    @staticmethod
    def zero(nvars: int) -> Polynomial:
        return Polynomial(nvars, ())

    @staticmethod
    def constant(c: int, nvars: int) -> Polynomial:
        return Polynomial(nvars, _normalize(nvars, {(0,) * nvars: c}))

    @staticmethod
    def variable(index: int, nvars: int) -> Polynomial:
        """The variable x_{index+1} (0-based index) in nvars variables."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return Polynomial(nvars, ((mono, 1),))

    @staticmethod
    def from_terms(nvars: int, terms: Iterable[tuple[Monomial, int]]) -> Polynomial:
        acc: dict[Monomial, int] = {}
        for m, c in terms:
            acc[tuple(m)] = acc.get(tuple(m), 0) + c
        return Polynomial(nvars, _normalize(nvars, acc))

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.constant(other, self.nvars)
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.nvars, _normalize(self.nvars, acc))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, _normalize(self.nvars, acc))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def homogeneous_components(self) -> dict[int, Polynomial]:
        """Split into degree parts; keys are the occurring degrees."""
        parts: dict[int, dict[Monomial, int]] = {}
        for m, c in self.terms:
            parts.setdefault(sum(m), {})[m] = c
        return {
            d: Polynomial(self.nvars, _normalize(self.nvars, terms))
            for d, terms in sorted(parts.items())
        }

    def leading_coefficient(self) -> int:
        return self.terms[0][1] if self.terms else 0

    def sign_normalized(self) -> Polynomial:
        """Flip signs so the graded-lex leading coefficient is positive."""
        return -self if self.leading_coefficient() < 0 else self

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Map variable i to images[i]; images share a common ring."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        out = Polynomial.zero(target)
        for m, c in self.terms:
            term = Polynomial.constant(c, target)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * images[i]
            out = out + term
        return out


def format_polynomial(p: Polynomial, names: Sequence[str]) -> str:
    """Render with ^ for powers, e.g. "y1^2 + y1*y2".

    >>> x = Polynomial.variable(0, 2); y = Polynomial.variable(1, 2)
    >>> format_polynomial(x * x - 2 * y, ("x", "y"))
    'x^2 - 2*y'
    """
    if len(names) != p.nvars:
        raise ValueError("need one name per variable")
    if not p.terms:
        return "0"
    chunks = []
    for m, c in p.terms:
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        sign = "-" if c < 0 else "+"
        chunks.append((sign, text))
    first_sign, first_text = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_text
    for sign, text in chunks[1:]:
        out += f" {sign} {text}"
    return out


def polynomial_json(p: Polynomial) -> dict:
    return {"nvars": p.nvars, "terms": [[list(m), c] for m, c in p.terms]}


def polynomial_from_json(data: dict) -> Polynomial:
    return Polynomial.from_terms(
        data["nvars"], [(tuple(m), c) for m, c in data["terms"]]
    )


def complete_homogeneous(m: int, upto: int, nvars: int) -> Polynomial:
    """h_m(x_1, ..., x_upto) inside a ring with nvars variables.

    >>> format_polynomial(complete_homogeneous(2, 2, 2), ("x1", "x2"))
    'x1^2 + x1*x2 + x2^2'
    """
    if upto > nvars:
        raise ValueError("more symmetric variables than ring variables")
    if m < 0:
        raise ValueError("negative degree")
    out = Polynomial.zero(nvars)
    # iterate weakly increasing index tuples 1 <= i_1 <= ... <= i_m <= upto
    def rec(start: int, left: int, mono: list[int]) -> None:
        nonlocal out
        if left == 0:
            out = out + Polynomial.from_terms(nvars, [(tuple(mono), 1)])
            return
        for i in range(start, upto):
            mono[i] += 1
            rec(i, left - 1, mono)
            mono[i] -= 1

    rec(0, m, [0] * nvars)
    return out
