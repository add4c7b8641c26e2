"""
Torsion-free classes of type-A quiver representations via sortable elements.

The indecomposable representations of an orientation of the linear graph
1 - 2 - ... - n are the interval modules M[i,j) for 1 <= i < j <= n+1,
supported on the vertices i..j-1 with identity maps along the present
arrows.  Inversions of a c-sortable permutation w pick out the members of
the torsion-free class F(w); Bruhat inversions pick out its simple
objects, and F(w) has the Jordan-Hoelder property exactly when supports
and Bruhat inversions are equinumerous.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import repkit
from .symgroup import (
    CoxeterWord,
    NotSortable,
    Orientation,
    Perm,
    bruhat_inversions,
    coxeter_element,
    enumerate_c_sortable,
    format_perm,
    inversions,
    is_c_sortable,
    length,
    sort_key_positions,
    support,
)


class IndexOutOfRange(ValueError):
    """Interval endpoints outside 1..n+1 or not increasing."""


@dataclass(frozen=True, order=True)
class IntervalModule:
    """The indecomposable M[i,j) supported on vertices i..j-1."""

    i: int
    j: int
    quiver: Orientation

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j <= self.quiver.n + 1:
            raise IndexOutOfRange(f"bad interval [{self.i},{self.j})")

    @property
    def vertex_support(self) -> range:
        return range(self.i, self.j)

    @property
    def module_length(self) -> int:
        return self.j - self.i

    def dimvec(self) -> tuple[int, ...]:
        return tuple(
            1 if v in self.vertex_support else 0
            for v in range(1, self.quiver.n + 1)
        )

    def __str__(self) -> str:
        return f"M[{self.i},{self.j})"


@dataclass(frozen=True)
class TorsionFreeClassA:
    """The torsion-free class F(w) of a c-sortable element w."""

    w: Perm
    quiver: Orientation
    modules: frozenset[IntervalModule]


def _require_sortable(w: Perm, q: Orientation) -> CoxeterWord:
    c = coxeter_element(q)
    ok, _ = is_c_sortable(w, c)
    if not ok:
        raise NotSortable(
            f"{format_perm(w)} is not c-sortable for orientation {q}"
        )
    return c


def class_of(w: Perm, q: Orientation) -> TorsionFreeClassA:
    """Interval modules of F(w), indexed by the inversions of w."""
    _require_sortable(w, q)
    mods = frozenset(IntervalModule(i, j, q) for (i, j) in inversions(w))
    return TorsionFreeClassA(tuple(w), q, mods)


def simples_of(w: Perm, q: Orientation) -> frozenset[IntervalModule]:
    """Simple objects of F(w), indexed by the Bruhat inversions of w."""
    _require_sortable(w, q)
    return frozenset(IntervalModule(i, j, q) for (i, j) in bruhat_inversions(w))


def jhp_verdict(w: Perm, q: Orientation) -> bool:
    """Does F(w) have the Jordan-Hoelder property?"""
    _require_sortable(w, q)
    return len(support(w)) == len(bruhat_inversions(w))


@dataclass(frozen=True)
class ConflationShape:
    """The standard short exact sequence splicing M[i,j) at l."""

    kind: str  # "ex1": M[i,l) is the submodule; "ex2": M[l,j) is
    sub: IntervalModule
    middle: IntervalModule
    quotient: IntervalModule


def standard_sequences(i: int, j: int, l: int, q: Orientation) -> ConflationShape:
    """Which of the two splices of M[i,j) at i < l < j is exact.

    M[i,l) is the submodule exactly when the edge between l-1 and l points
    l -> l-1; otherwise M[l,j) is.
    """
    if not (1 <= i < l < j <= q.n + 1):
        raise IndexOutOfRange(f"need 1 <= {i} < {l} < {j} <= {q.n + 1}")
    middle = IntervalModule(i, j, q)
    left = IntervalModule(i, l, q)
    right = IntervalModule(l, j, q)
    if q.arrow_points_left(l):
        return ConflationShape("ex1", left, middle, right)
    return ConflationShape("ex2", right, middle, left)


def census(q: Orientation) -> tuple[int, int, int]:
    """(#torsion-free classes, #with JHP, #faithful with JHP)."""
    c = coxeter_element(q)
    full = frozenset(range(1, q.n + 1))
    total = jhp = faithful_jhp = 0
    for w in enumerate_c_sortable(c):
        total += 1
        good = len(support(w)) == len(bruhat_inversions(w))
        if good:
            jhp += 1
            if support(w) == full:
                faithful_jhp += 1
    return total, jhp, faithful_jhp


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class TableRow:
    w: Perm
    supp: frozenset[int]
    inv: frozenset[tuple[int, int]]
    binv: frozenset[tuple[int, int]]
    n_simples: int
    jhp: bool


def table_rows(q: Orientation, faithful_only: bool = False) -> list[TableRow]:
    """Sortable-element table rows, ordered by length then sorting word."""
    c = coxeter_element(q)
    full = frozenset(range(1, q.n + 1))
    rows = []
    for w in sorted(
        enumerate_c_sortable(c), key=lambda w: (length(w), sort_key_positions(w, c))
    ):
        supp = support(w)
        if faithful_only and supp != full:
            continue
        binv = bruhat_inversions(w)
        rows.append(
            TableRow(w, supp, inversions(w), binv, len(binv), len(supp) == len(binv))
        )
    return rows


def format_transposition_set(ts: frozenset[tuple[int, int]]) -> str:
    return "{" + ",".join(f"({i},{j})" for i, j in sorted(ts)) + "}"


def format_index_set(s: frozenset[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def rows_to_csv(rows: list[TableRow]) -> str:
    lines = ["w,supp,inv,Binv,nsimp,jhp"]
    for r in rows:
        lines.append(
            ",".join(
                [
                    format_perm(r.w),
                    '"' + format_index_set(r.supp) + '"',
                    '"' + format_transposition_set(r.inv) + '"',
                    '"' + format_transposition_set(r.binv) + '"',
                    str(r.n_simples),
                    "true" if r.jhp else "false",
                ]
            )
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bridge to explicit representations over the two-element field


def path_algebra(q: Orientation) -> repkit.PresentedAlgebra:
    arrows = tuple(
        (f"a{k}", src, tgt) for k, (src, tgt) in enumerate(q.arrows(), start=1)
    )
    return repkit.PresentedAlgebra(q.n, arrows, ())


def interval_rep(m: IntervalModule, algebra: repkit.PresentedAlgebra | None = None) -> repkit.Rep:
    if algebra is None:
        algebra = path_algebra(m.quiver)
    dims = m.dimvec()
    maps = []
    for _, src, tgt in algebra.arrows:
        if dims[src - 1] and dims[tgt - 1]:
            maps.append((1,))
        else:
            maps.append((0,) * dims[src - 1])
    return repkit.Rep(algebra, dims, tuple(maps))


def interval_catalogue(q: Orientation) -> tuple[list[IntervalModule], list[repkit.Rep]]:
    """All interval modules of the orientation, with their explicit reps."""
    algebra = path_algebra(q)
    mods = [
        IntervalModule(i, j, q)
        for i in range(1, q.n + 1)
        for j in range(i + 1, q.n + 2)
    ]
    return mods, [interval_rep(m, algebra) for m in mods]


def torsion_free_membership(w: Perm, q: Orientation) -> repkit.Membership:
    """repkit membership for F(w) inside the module category of the quiver."""
    _require_sortable(w, q)
    mods, reps = interval_catalogue(q)
    inv = inversions(w)
    allowed = frozenset(k for k, m in enumerate(mods) if (m.i, m.j) in inv)
    return repkit.Membership.additive(
        tuple(reps),
        allowed,
        name=f"F({format_perm(w)}) over {q}",
        labels=tuple(str(m) for m in mods),
    )
