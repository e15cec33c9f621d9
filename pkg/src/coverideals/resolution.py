"""Multigraded Betti numbers of monomial ideals and linearity tests.

Two independent engines compute the same table:

* ``taylor_strand_betti`` works straight from the subset complex of the
  generators; the strand of the complex at a fixed multidegree, with the
  differential keeping a face only when dropping a generator leaves the lcm
  unchanged, has the Betti numbers as its homology.  Cost is 2^g in the
  number of generators, so it is the small-instance oracle.

* ``koszul_betti`` enumerates the lcm lattice of the generators and reads
  beta_{i,a} off the reduced homology (one dimension down) of the squarefree
  complex {b <= support(a) : x^(a-b) in I}, which lives on at most n
  vertices regardless of the generator count.

Linear resolutions, componentwise linearity, linear quotients (with order
search), the polymatroidal exchange condition, and first-syzygy degree
bounds are layered on top.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, NotEquigeneratedError
from .linalg import matrix_rank
from .monomials import Monomial, MonomialIdeal

DEFAULT_TAYLOR_CAP = 14
BACKTRACKING_CAP = 20


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field: the rationals (p=None) or GF(p) for a prime p."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None:
            if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p**0.5) + 1)):
                raise ValueError(f"{self.p} is not prime")

    @property
    def label(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def __str__(self) -> str:
        return self.label


RATIONALS = FieldChoice(None)


def parse_field(text: str) -> FieldChoice:
    text = text.strip()
    if text in ("Q", "q", "QQ", "rationals"):
        return RATIONALS
    if text.startswith(("F", "f")):
        text = text[1:]
    return FieldChoice(int(text))


class BettiTable:
    """Multigraded Betti numbers with their coarse (total-degree) shadow.

    ``multigraded`` maps (homological index i, exponent tuple) to a positive
    rank; ``coarse`` maps (i, total degree) to the sum over multidegrees.
    """

    __slots__ = ("nvars", "field", "multigraded", "coarse")

    def __init__(self, nvars: int, field: FieldChoice, multigraded: dict):
        self.nvars = nvars
        self.field = field
        self.multigraded = {k: r for k, r in multigraded.items() if r}
        coarse: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), r in self.multigraded.items():
            coarse[(i, sum(a))] += r
        self.coarse = dict(coarse)

    def multigraded_entries(self) -> list[tuple[int, tuple, int]]:
        return sorted(
            (i, a, r) for (i, a), r in self.multigraded.items()
        )

    def coarse_entries(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, r) for (i, j), r in self.coarse.items())

    def generator_histogram(self) -> dict[int, int]:
        """Degree -> number of minimal generators, read from row i=0."""
        return {j: r for (i, j), r in self.coarse.items() if i == 0}

    def max_index(self) -> int:
        return max((i for i, _ in self.coarse), default=-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BettiTable)
            and self.nvars == other.nvars
            and self.multigraded == other.multigraded
        )

    def __repr__(self) -> str:
        return f"BettiTable({self.coarse_entries()})"

    def to_json_dict(self) -> dict:
        rows = sorted((i, sum(a), a, r) for (i, a), r in self.multigraded.items())
        return {
            "field": self.field.label,
            "coarse": [[i, j, r] for i, j, r in self.coarse_entries()],
            "multigraded": [[i, list(a), r] for i, _, a, r in rows],
        }


# ---------------------------------------------------------------------------
# simplicial homology


def downward_closure(faces: Iterable[Iterable[int]]) -> set[frozenset]:
    closed: set[frozenset] = set()
    stack = [frozenset(f) for f in faces]
    if stack:
        closed.add(frozenset())
    while stack:
        f = stack.pop()
        if f in closed:
            continue
        closed.add(f)
        for v in f:
            stack.append(f - {v})
    return closed


def simplicial_homology_ranks(
    faces: Iterable[Iterable[int]], field: FieldChoice = RATIONALS
) -> list[int]:
    """Reduced homology ranks by dimension, starting at dimension -1.

    ``faces`` must be closed under taking subsets; the empty face is implied
    and need not be listed.  The empty complex (only the empty face) has
    rank 1 in dimension -1; the void complex (no faces at all) has no
    homology and yields [].
    """
    face_set = {frozenset(f) for f in faces}
    if not face_set:
        return []
    face_set.add(frozenset())
    if face_set != downward_closure(face_set):
        raise ValueError("faces are not closed under taking subsets")
    return _reduced_homology(face_set, field)


def _reduced_homology(face_set: set[frozenset], field: FieldChoice) -> list[int]:
    by_dim: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for f in face_set:
        by_dim[len(f) - 1].append(tuple(sorted(f)))
    top = max(by_dim)
    for d in by_dim:
        by_dim[d].sort()
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}
    # rank of each boundary map d_k : C_k -> C_{k-1}
    bd_rank: dict[int, int] = {}
    for d in range(0, top + 1):
        cols = []
        lower = index.get(d - 1, {})
        for f in by_dim.get(d, []):
            col = {}
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1 :]
                col[lower[sub]] = -1 if pos % 2 else 1
            cols.append(col)
        bd_rank[d] = matrix_rank(cols, field.p) if cols and lower else 0
    ranks = []
    for d in range(-1, top + 1):
        dim_c = len(by_dim.get(d, []))
        ranks.append(dim_c - bd_rank.get(d, 0) - bd_rank.get(d + 1, 0))
    return ranks


# ---------------------------------------------------------------------------
# Betti engines


def taylor_strand_betti(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    cap: int = DEFAULT_TAYLOR_CAP,
) -> BettiTable:
    """Multigraded Betti numbers from the strands of the generator-subset
    complex.  Exponential in the generator count; the cap (default 14)
    rejects inputs where ``koszul_betti`` should be used instead."""
    gens = ideal.generators
    g = len(gens)
    if g > cap:
        raise CapacityError(
            f"{g} generators exceeds the subset-complex cap {cap}; "
            "use koszul_betti"
        )
    if g == 0:
        return BettiTable(ideal.nvars, field, {})
    exps = [m.exponents for m in gens]
    nmasks = 1 << g
    lcm_of = [None] * nmasks
    for mask in range(1, nmasks):
        low = mask & -mask
        rest = mask ^ low
        e = exps[low.bit_length() - 1]
        lcm_of[mask] = e if not rest else tuple(map(max, lcm_of[rest], e))

    strata: dict[tuple, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    for mask in range(1, nmasks):
        strata[lcm_of[mask]][mask.bit_count()].append(mask)

    multigraded: dict[tuple, int] = {}
    for a, by_size in strata.items():
        index = {
            size: {mask: i for i, mask in enumerate(masks)}
            for size, masks in by_size.items()
        }
        bd_rank: dict[int, int] = {}
        for size, masks in by_size.items():
            lower = index.get(size - 1)
            if not lower:
                bd_rank[size] = 0
                continue
            cols = []
            for mask in masks:
                col = {}
                bits = [b for b in range(g) if mask >> b & 1]
                for pos, b in enumerate(bits):
                    sub = mask ^ (1 << b)
                    if lcm_of[sub] == a:
                        col[lower[sub]] = -1 if pos % 2 else 1
                cols.append(col)
            bd_rank[size] = matrix_rank(cols, field.p)
        for size, masks in by_size.items():
            h = len(masks) - bd_rank.get(size, 0) - bd_rank.get(size + 1, 0)
            if h:
                multigraded[(size - 1, a)] = h
    return BettiTable(ideal.nvars, field, multigraded)


def lcm_lattice(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """All lcms of non-empty generator subsets (the only multidegrees where
    Betti numbers can live)."""
    lattice: set[tuple[int, ...]] = set()
    for gen in ideal.generators:
        e = gen.exponents
        new = {tuple(map(max, e, a)) for a in lattice}
        new.add(e)
        lattice |= new
    return sorted(lattice)


def koszul_betti(
    ideal: MonomialIdeal, field: FieldChoice = RATIONALS
) -> BettiTable:
    """Multigraded Betti numbers via squarefree complexes at each lcm-lattice
    multidegree; scales with 2^n rather than 2^(number of generators)."""
    if ideal.is_zero():
        return BettiTable(ideal.nvars, field, {})
    n = ideal.nvars
    gen_exps = [g.exponents for g in ideal.generators]
    multigraded: dict[tuple, int] = {}
    for a in lcm_lattice(ideal):
        support = [i for i in range(n) if a[i] > 0]
        faces = []
        for r in range(len(support) + 1):
            for sub in combinations(support, r):
                rest = list(a)
                for i in sub:
                    rest[i] -= 1
                if any(
                    all(g_e <= r_e for g_e, r_e in zip(gen, rest))
                    for gen in gen_exps
                ):
                    faces.append(frozenset(sub))
        # faces form a downward-closed family by construction
        ranks = _reduced_homology(set(faces), field)
        for i, r in enumerate(ranks):
            # ranks[i] is reduced homology in dimension i-1 = beta_{i,a}
            if r:
                multigraded[(i, a)] = r
    return BettiTable(ideal.nvars, field, multigraded)


def betti_table(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    engine: str = "auto",
    taylor_cap: int = DEFAULT_TAYLOR_CAP,
) -> BettiTable:
    if engine == "taylor":
        return taylor_strand_betti(ideal, field, cap=taylor_cap)
    if engine == "koszul":
        return koszul_betti(ideal, field)
    if engine == "auto":
        if len(ideal.generators) <= taylor_cap:
            return taylor_strand_betti(ideal, field, cap=taylor_cap)
        return koszul_betti(ideal, field)
    raise ValueError(f"unknown engine {engine!r}")


def first_syzygy_degrees(ideal: MonomialIdeal) -> list[int]:
    """Total degrees of pairwise generator lcms (sorted, with multiplicity).

    Every nonzero beta_{1,j} has j in this multiset's degree range: the
    minimal resolution sits inside the subset-complex resolution, whose
    first-syzygy slots are the generator pairs.
    """
    gens = ideal.generators
    return sorted(
        f.lcm(g).degree for f, g in combinations(gens, 2)
    )


# ---------------------------------------------------------------------------
# linearity


def has_linear_resolution(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    engine: str = "auto",
    taylor_cap: int = DEFAULT_TAYLOR_CAP,
) -> tuple[bool, Optional[tuple[int, int]]]:
    """For an ideal generated in a single degree d: is every nonzero coarse
    Betti entry at (i, i+d)?  Returns (verdict, offending (i, j) or None)."""
    if ideal.is_zero():
        return True, None
    if not ideal.is_equigenerated():
        raise NotEquigeneratedError(
            f"generator degrees {sorted(set(ideal.degrees()))} are not equal"
        )
    d = ideal.min_degree()
    table = betti_table(ideal, field, engine, taylor_cap)
    for i, j, _ in table.coarse_entries():
        if j != i + d:
            return False, (i, j)
    return True, None


@dataclass(frozen=True)
class DegreeVerdict:
    degree: int
    status: str  # "linear" | "not linear" | "zero component"
    offending: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class CwlReport:
    """Per-degree linearity verdicts plus the overall decision.

    ``certificate`` carries a linear-quotients order when one was found,
    which certifies the verdict independently of the Betti computation.
    """

    nvars: int
    field: FieldChoice
    verdicts: tuple[DegreeVerdict, ...]
    overall: bool
    vacuous: bool = False
    certificate: Optional[tuple[Monomial, ...]] = None

    def failing_degree(self) -> Optional[int]:
        for v in self.verdicts:
            if v.status == "not linear":
                return v.degree
        return None

    def to_json_dict(self) -> dict:
        per_degree = []
        for v in self.verdicts:
            entry: dict = {"degree": v.degree, "verdict": v.status}
            if v.offending is not None:
                entry["offending"] = list(v.offending)
            per_degree.append(entry)
        return {
            "field": self.field.label,
            "overall": self.overall,
            "vacuous": self.vacuous,
            "per_degree": per_degree,
            "certificate": (
                [str(m) for m in self.certificate] if self.certificate else None
            ),
        }


def is_componentwise_linear(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    engine: str = "auto",
    extra_degrees: int = 0,
    taylor_cap: int = DEFAULT_TAYLOR_CAP,
    with_certificate: bool = True,
) -> CwlReport:
    """Check a linear resolution for every degree component of the ideal.

    Degrees from the smallest to the largest minimal-generator degree
    suffice: past the top degree each component is the maximal-ideal
    multiple of the previous one, which preserves having a linear
    resolution.  ``extra_degrees`` extends the sweep anyway for empirical
    comfort.
    """
    if ideal.is_zero():
        return CwlReport(ideal.nvars, field, (), True, vacuous=True)
    lo, hi = ideal.min_degree(), ideal.max_degree() + extra_degrees
    verdicts = []
    overall = True
    for d in range(lo, hi + 1):
        comp = ideal.component(d)
        if comp.is_zero():
            verdicts.append(DegreeVerdict(d, "zero component"))
            continue
        ok, offending = has_linear_resolution(comp, field, engine, taylor_cap)
        if ok:
            verdicts.append(DegreeVerdict(d, "linear"))
        else:
            verdicts.append(DegreeVerdict(d, "not linear", offending))
            overall = False
    certificate = None
    if with_certificate and overall:
        order = find_linear_quotient_order(ideal, strategy="deglex")
        if order is not None:
            certificate = tuple(order)
    return CwlReport(ideal.nvars, field, tuple(verdicts), overall, certificate=certificate)


# ---------------------------------------------------------------------------
# linear quotients


@dataclass(frozen=True)
class QuotientsResult:
    ok: bool
    # colon generators per step k = 2..r (step k lives at index k-2)
    steps: tuple[tuple[Monomial, ...], ...]
    failing_index: Optional[int] = None  # 1-based position of the bad f_k
    offending: Optional[Monomial] = None  # a colon generator of degree != 1


def linear_quotients_check(gens: Sequence[Monomial]) -> QuotientsResult:
    """Do the successive colon ideals of this exact listing stay generated
    by single variables?  Stops at the first failing step."""
    if not gens:
        raise ValueError("empty generator list")
    nvars = gens[0].nvars
    if len(set(gens)) != len(gens):
        raise ValueError("generator list has duplicates")
    for f, h in combinations(gens, 2):
        if f.divides(h) or h.divides(f):
            raise ValueError(f"{f} and {h} are not both minimal generators")
    steps: list[tuple[Monomial, ...]] = []
    for k in range(2, len(gens) + 1):
        prefix = MonomialIdeal(nvars, gens[: k - 1])
        colon = prefix.colon(gens[k - 1])
        steps.append(colon.generators)
        bad = next((m for m in colon.generators if m.degree != 1), None)
        if bad is not None:
            return QuotientsResult(False, tuple(steps), k, bad)
    return QuotientsResult(True, tuple(steps))


def find_linear_quotient_order(
    ideal: MonomialIdeal, strategy: str = "deglex", cap: int = BACKTRACKING_CAP
) -> Optional[list[Monomial]]:
    """Search for a generator listing with linear quotients.

    ``deglex`` sorts once and tests; ``backtracking`` explores every
    degree-nondecreasing listing with failed-prefix memoization (capped at
    20 generators).  Either way a returned order passes
    ``linear_quotients_check``; None means the search failed.
    """
    if ideal.is_zero():
        raise ValueError("zero ideal has no generator ordering")
    gens = list(ideal.generators)
    if len(gens) == 1:
        return gens
    if strategy == "deglex":
        return gens if linear_quotients_check(gens).ok else None
    if strategy != "backtracking":
        raise ValueError(f"unknown strategy {strategy!r}")
    if len(gens) > cap:
        raise CapacityError(
            f"backtracking over {len(gens)} generators exceeds the cap {cap}"
        )
    nvars = ideal.nvars
    failed: set[frozenset] = set()
    chosen: list[Monomial] = []

    def colon_is_linear(prefix: Sequence[Monomial], f: Monomial) -> bool:
        colon = MonomialIdeal(nvars, prefix).colon(f)
        return all(m.degree == 1 for m in colon.generators)

    def search(remaining: list[Monomial]) -> bool:
        if not remaining:
            return True
        state = frozenset(chosen)
        if state in failed:
            return False
        min_deg = min(m.degree for m in remaining)
        for f in remaining:  # remaining stays deglex-sorted
            if f.degree != min_deg:
                break  # degree-nondecreasing orders only
            if chosen and not colon_is_linear(chosen, f):
                continue
            chosen.append(f)
            rest = [m for m in remaining if m is not f]
            if search(rest):
                return True
            chosen.pop()
        failed.add(state)
        return False

    if search(gens):
        return chosen
    return None


# ---------------------------------------------------------------------------
# polymatroidal exchange


def polymatroidal_check(
    ideal: MonomialIdeal,
) -> tuple[bool, Optional[tuple[Monomial, Monomial, int]]]:
    """Exchange condition on an equigenerated ideal: whenever u has a larger
    exponent than v at position i, some j with a smaller exponent makes
    x_j * u / x_i a generator again.  Returns (verdict, witness (u, v, i)
    with i 1-based) on failure."""
    if not ideal.is_equigenerated():
        raise NotEquigeneratedError(
            f"generator degrees {sorted(set(ideal.degrees()))} are not equal"
        )
    gens = ideal.generators
    gen_set = {g.exponents for g in gens}
    n = ideal.nvars
    for u in gens:
        for v in gens:
            if u is v:
                continue
            ue, ve = u.exponents, v.exponents
            for i in range(n):
                if ue[i] <= ve[i]:
                    continue
                found = False
                for j in range(n):
                    if ue[j] >= ve[j]:
                        continue
                    swapped = list(ue)
                    swapped[i] -= 1
                    swapped[j] += 1
                    if tuple(swapped) in gen_set:
                        found = True
                        break
                if not found:
                    return False, (u, v, i + 1)
    return True, None
