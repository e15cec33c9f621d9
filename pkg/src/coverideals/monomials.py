"""Exact arithmetic with monomials and monomial ideals.

A monomial is an exponent vector over a fixed number of ring variables
x1..xn; a monomial ideal is its unique minimal generating set.  Everything
here is integer arithmetic: divisibility, lcm/gcd, minimal generators,
intersections, powers, colon ideals, degree components, and the degree-lex
order used to list generators canonically.

Text format (files and CLI): ``x1^2*x3`` with ``1`` for the unit monomial.
Ideal files start with a ``vars <n>`` line followed by one monomial per line.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DimensionError

DEFAULT_EXPONENT_CAP = 64
COMPONENT_ENUMERATION_CAP = 2_000_000

_exponent_cap = DEFAULT_EXPONENT_CAP


def exponent_cap() -> int:
    return _exponent_cap


def set_exponent_cap(cap: int) -> None:
    """Raise the guard against runaway exponents (default 64)."""
    global _exponent_cap
    if cap < 1:
        raise ValueError("exponent cap must be positive")
    _exponent_cap = cap


class Monomial:
    """An exponent vector; immutable, hashable, totally ordered by deglex."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Sequence[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one ring variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        if max(exps) > _exponent_cap:
            raise CapacityError(
                f"exponent {max(exps)} exceeds the cap {_exponent_cap}; "
                "raise it with set_exponent_cap() if intended"
            )
        self.exponents = exps
        self.degree = sum(exps)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def _check_same_ring(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise DimensionError(
                f"monomials in {len(self.exponents)} and "
                f"{len(other.exponents)} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """Exact division; ``other`` must divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def is_unit(self) -> bool:
        return self.degree == 0

    def deglex_key(self):
        # Total degree first; ties broken scanning from the highest-index
        # variable down, larger exponent there sorting earlier.
        return (self.degree, tuple(-e for e in reversed(self.exponents)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __lt__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self.deglex_key() < other.deglex_key()

    def __le__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self.deglex_key() <= other.deglex_key()

    def __repr__(self) -> str:
        return f"Monomial({self.exponents!r})"

    def __str__(self) -> str:
        return format_monomial(self)


def unit_monomial(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def variable(nvars: int, index: int) -> Monomial:
    """The monomial x_index (1-based)."""
    if not 1 <= index <= nvars:
        raise ValueError(f"variable index {index} out of range 1..{nvars}")
    return Monomial(tuple(1 if i == index - 1 else 0 for i in range(nvars)))


def deglex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1; lower degree first, ties from the top variable down."""
    a._check_same_ring(b)
    ka, kb = a.deglex_key(), b.deglex_key()
    return -1 if ka < kb else (0 if ka == kb else 1)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Monomial:
    text = text.strip()
    if text == "1":
        return unit_monomial(nvars)
    exps = [0] * nvars
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if m is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        idx, exp = int(m.group(1)), int(m.group(2) or 1)
        if not 1 <= idx <= nvars:
            raise ValueError(f"variable x{idx} out of range 1..{nvars}")
        if exp < 1:
            raise ValueError(f"exponent must be >= 1 in {factor!r}")
        exps[idx - 1] += exp
    return Monomial(exps)


def minimalize(nvars: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
    """Keep only the divisibility-minimal monomials; empty input gives the
    zero ideal."""
    pool = set()
    for m in monomials:
        if m.nvars != nvars:
            raise DimensionError(f"monomial in {m.nvars} variables, expected {nvars}")
        pool.add(m)
    ordered = sorted(pool, key=Monomial.deglex_key)
    kept: list[Monomial] = []
    for m in ordered:
        # earlier entries have lower or equal degree, so only they can divide m
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return MonomialIdeal._from_minimal(nvars, tuple(kept))


class MonomialIdeal:
    """A monomial ideal stored as its minimal generators in deglex order.

    The zero ideal has no generators; the unit ideal is generated by the
    monomial 1.  Construction minimalizes, so any generating set is accepted.
    """

    __slots__ = ("nvars", "generators")

    def __init__(self, nvars: int, generators: Iterable[Monomial] = ()):
        if nvars < 1:
            raise ValueError("need at least one ring variable")
        minimal = minimalize(nvars, generators)
        self.nvars = nvars
        self.generators = minimal.generators

    @classmethod
    def _from_minimal(cls, nvars: int, gens: tuple) -> "MonomialIdeal":
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.generators = gens
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        if nvars < 1:
            raise ValueError("need at least one ring variable")
        return cls._from_minimal(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls._from_minimal(nvars, (unit_monomial(nvars),))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit()

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.generators))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"MonomialIdeal({self.nvars}, <{gens}>)"

    def _check_same_ring(self, other: "MonomialIdeal") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(
                f"ideals in {self.nvars} and {other.nvars} variables"
            )

    def contains(self, m: Monomial) -> bool:
        if m.nvars != self.nvars:
            raise DimensionError(f"monomial in {m.nvars} variables, expected {self.nvars}")
        return any(g.divides(m) for g in self.generators)

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def min_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero ideal has no generator degrees")
        return self.generators[0].degree

    def max_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero ideal has no generator degrees")
        return self.generators[-1].degree

    def is_equigenerated(self) -> bool:
        return self.is_zero() or self.min_degree() == self.max_degree()

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        return minimalize(
            self.nvars,
            (f.lcm(g) for f in self.generators for g in other.generators),
        )

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        return minimalize(
            self.nvars,
            (f * g for f in self.generators for g in other.generators),
        )

    def power(self, t: int) -> "MonomialIdeal":
        if t < 0:
            raise ValueError("negative ideal power")
        if t == 0:
            return MonomialIdeal.unit(self.nvars)
        result = self
        for _ in range(t - 1):
            # minimalizing between steps keeps the generator count down
            result = result.multiply(self)
        return result

    def colon(self, f: Monomial) -> "MonomialIdeal":
        """The colon ideal self : f, so m is in it iff m*f is in self."""
        if f.nvars != self.nvars:
            raise DimensionError(f"monomial in {f.nvars} variables, expected {self.nvars}")
        return minimalize(
            self.nvars, (g.quotient(g.gcd(f)) for g in self.generators)
        )

    def component(self, d: int) -> "MonomialIdeal":
        """The ideal generated by all degree-d monomials of self.

        Its minimal generators are exactly the degree-d monomials contained
        in self (monomials of one degree never divide each other).
        """
        if d < 0:
            raise ValueError("negative degree")
        seen: set[tuple] = set()
        n = self.nvars
        for g in self.generators:
            k = d - g.degree
            if k < 0:
                continue
            count = _ncompositions(k, n)
            if count > COMPONENT_ENUMERATION_CAP:
                raise CapacityError(
                    f"enumerating the degree-{d} component needs {count} "
                    "multiples per generator; beyond the enumeration cap"
                )
            base = g.exponents
            for extra in _compositions(k, n):
                seen.add(tuple(b + e for b, e in zip(base, extra)))
        gens = tuple(
            Monomial(e) for e in sorted(seen, key=lambda e: Monomial(e).deglex_key())
        )
        return MonomialIdeal._from_minimal(self.nvars, gens)


def _ncompositions(k: int, n: int) -> int:
    # number of weak compositions of k into n parts
    from math import comb

    return comb(k + n - 1, n - 1)


def _compositions(k: int, n: int) -> Iterator[tuple]:
    """All weak compositions of k into n non-negative parts."""
    if n == 1:
        yield (k,)
        return
    for bars in combinations(range(k + n - 1), n - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(k + n - 2 - prev)
        yield tuple(comp)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"vars {ideal.nvars}"]
    lines.extend(format_monomial(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("vars"):
        raise ValueError("ideal file must start with a 'vars <n>' line")
    try:
        nvars = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad vars line {lines[0]!r}") from exc
    gens = [parse_monomial(ln, nvars) for ln in lines[1:]]
    return MonomialIdeal(nvars, gens)


def load_ideal(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())
