"""
Nakayama algebras through their Kupisch series.

Indecomposable modules over a Nakayama algebra are uniserial and are
pinned down by a top vertex and a length, so torsion-free classes can be
analyzed as plain sets of (top, length) pairs: the unique submodule chain
of a uniserial walks the top down the quiver (arrows run i+1 -> i, with
wraparound in the cyclic case), the minimal available length per top is
the simple object of the class, and the maximal one is the projective.

The input line "kupisch: 3,2,1" lists projective lengths from the top
vertex n down to vertex 1 (so the last entry, the sink, is always 1);
"kupisch-cyclic: 2,2" lists them by vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import repkit


class InvalidClass(ValueError):
    """The member set is not closed under uniserial submodules."""


@dataclass(frozen=True)
class KupischSeries:
    """Maximal uniserial length per top vertex; lengths[t-1] is for top t."""

    lengths: tuple[int, ...]
    cyclic: bool = False

    def __post_init__(self) -> None:
        n = len(self.lengths)
        if n == 0 or any(l < 1 for l in self.lengths):
            raise ValueError("lengths must be positive")
        if self.cyclic:
            if not (
                all(l >= 2 for l in self.lengths)
                or all(l == 1 for l in self.lengths)
            ):
                raise ValueError("cyclic series needs all lengths >= 2 (or all 1)")
            for t in range(n):
                if self.lengths[t] > self.lengths[t - 1] + 1:
                    raise ValueError("cyclic series must grow by at most 1")
        else:
            if self.lengths[0] != 1:
                raise ValueError("vertex 1 is the sink: its projective is simple")
            for t in range(1, n):
                if self.lengths[t] > self.lengths[t - 1] + 1:
                    raise ValueError("series must grow by at most 1 along the quiver")
                if self.lengths[t] > t + 1:
                    raise ValueError("uniserials cannot walk past vertex 1")

    @property
    def n(self) -> int:
        return len(self.lengths)

    def max_length(self, top: int) -> int:
        return self.lengths[top - 1]

    def shift(self, top: int, steps: int) -> int:
        if self.cyclic:
            return (top - steps - 1) % self.n + 1
        return top - steps


def parse_class(text: str) -> frozenset[Uniserial]:
    """Parse a member list like "1:1, 2:2, 3:3"."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for item in text.split(","):
        top, _, length = item.strip().partition(":")
        out.add(Uniserial(int(top), int(length)))
    return frozenset(out)


def format_class(members: frozenset[Uniserial]) -> str:
    return ", ".join(str(u) for u in sorted(members))


def parse_kupisch(text: str) -> KupischSeries:
    line = text.strip()
    if line.startswith("kupisch-cyclic:"):
        vals = tuple(int(x) for x in line.split(":", 1)[1].split(","))
        return KupischSeries(vals, cyclic=True)
    if line.startswith("kupisch:"):
        vals = tuple(int(x) for x in line.split(":", 1)[1].split(","))
        return KupischSeries(tuple(reversed(vals)), cyclic=False)
    raise ValueError(f"cannot parse Kupisch line {text!r}")


@dataclass(frozen=True, order=True)
class Uniserial:
    top: int
    length: int

    def __str__(self) -> str:
        return f"{self.top}:{self.length}"


def is_valid_uniserial(kup: KupischSeries, u: Uniserial) -> bool:
    return 1 <= u.top <= kup.n and 1 <= u.length <= kup.max_length(u.top)


def submodule_chain(kup: KupischSeries, u: Uniserial) -> list[Uniserial]:
    """Proper submodules of a uniserial, shortest first.

    The length-k submodule keeps the bottom k radical layers, so its top
    sits length-k steps below the original top.
    """
    if not is_valid_uniserial(kup, u):
        raise InvalidClass(f"invalid uniserial {u}")
    out = []
    for k in range(1, u.length):
        sub = Uniserial(kup.shift(u.top, u.length - k), k)
        if not is_valid_uniserial(kup, sub):
            raise InvalidClass(f"submodule {sub} of {u} escapes the algebra")
        out.append(sub)
    return out


def validate(kup: KupischSeries, members: frozenset[Uniserial]):
    """Submodule closure check; returns (ok, violations)."""
    violations = []
    for u in sorted(members):
        if not is_valid_uniserial(kup, u):
            violations.append((u, "not a module of this algebra"))
            continue
        for sub in submodule_chain(kup, u):
            if sub not in members:
                violations.append((u, f"missing submodule {sub}"))
    return not violations, violations


def simples_and_projectives(
    kup: KupischSeries, members: frozenset[Uniserial]
) -> dict[int, tuple[Uniserial, Uniserial]]:
    """top -> (simple object, projective object) of the class.

    Per top vertex appearing in the class, the member of minimal length is
    simple in the class and the member of maximal length is projective in
    it; both assignments are bijections onto the respective object sets.
    """
    ok, violations = validate(kup, members)
    if not ok:
        raise InvalidClass(f"not submodule-closed: {violations}")
    by_top: dict[int, list[int]] = {}
    for u in members:
        by_top.setdefault(u.top, []).append(u.length)
    return {
        t: (Uniserial(t, min(ls)), Uniserial(t, max(ls)))
        for t, ls in sorted(by_top.items())
    }


def jhp_check(kup: KupischSeries, members: frozenset[Uniserial]):
    """(#simples, #indecomposable projectives, verdict).

    The two counts agree for every torsion-free class over a Nakayama
    algebra, so the verdict is always True; a False would flag a bug.
    """
    table = simples_and_projectives(kup, members)
    n_simp = len({s for s, _ in table.values()})
    n_proj = len({p for _, p in table.values()})
    return n_simp, n_proj, n_simp == n_proj


# ---------------------------------------------------------------------------
# explicit representations


def algebra(kup: KupischSeries) -> repkit.PresentedAlgebra:
    """The path algebra with relations cutting projectives to their lengths."""
    n = kup.n
    arrows = []
    arrow_from: dict[int, int] = {}
    for t in range(2, n + 1):
        arrow_from[t] = len(arrows)
        arrows.append((f"a{t}", t, t - 1))
    if kup.cyclic:
        arrow_from[1] = len(arrows)
        arrows.append(("a1", 1, n))
    relations = []
    for t in range(1, n + 1):
        lam = kup.max_length(t)
        path = []
        v = t
        for _ in range(lam):
            if v not in arrow_from:
                path = None
                break
            path.append(arrow_from[v])
            v = kup.shift(v, 1)
        if path is not None:
            relations.append(tuple(path))
    return repkit.PresentedAlgebra(n, tuple(arrows), tuple(relations))


def uniserial_rep(
    kup: KupischSeries, u: Uniserial, alg: repkit.PresentedAlgebra | None = None
) -> repkit.Rep:
    if alg is None:
        alg = algebra(kup)
    if not is_valid_uniserial(kup, u):
        raise InvalidClass(f"invalid uniserial {u}")
    layer_vertex = [kup.shift(u.top, k) for k in range(u.length)]
    coord: dict[int, int] = {}
    per_vertex: dict[int, list[int]] = {}
    for k, v in enumerate(layer_vertex):
        per_vertex.setdefault(v, []).append(k)
        coord[k] = len(per_vertex[v]) - 1
    dims = tuple(len(per_vertex.get(v, ())) for v in range(1, kup.n + 1))
    maps = []
    for _, s, t in alg.arrows:
        cols = []
        for k in per_vertex.get(s, ()):
            nxt = k + 1
            if nxt < u.length and layer_vertex[nxt] == t:
                cols.append(1 << coord[nxt])
            else:
                cols.append(0)
        maps.append(tuple(cols))
    return repkit.Rep(alg, dims, tuple(maps))


def catalogue(kup: KupischSeries):
    """All uniserials with their representations, sorted by (top, length)."""
    alg = algebra(kup)
    mods = [
        Uniserial(t, l)
        for t in range(1, kup.n + 1)
        for l in range(1, kup.max_length(t) + 1)
    ]
    mods.sort()
    return alg, mods, [uniserial_rep(kup, u, alg) for u in mods]


def full_membership(kup: KupischSeries) -> repkit.Membership:
    _, mods, reps = catalogue(kup)
    return repkit.Membership.full(
        tuple(reps), labels=tuple(str(u) for u in mods), name=f"mod kupisch{kup.lengths}"
    )


def class_membership(
    kup: KupischSeries, members: frozenset[Uniserial]
) -> repkit.Membership:
    _, mods, reps = catalogue(kup)
    allowed = frozenset(k for k, u in enumerate(mods) if u in members)
    return repkit.Membership.additive(
        tuple(reps),
        allowed,
        labels=tuple(str(u) for u in mods),
        name=f"tf-class over kupisch{kup.lengths}",
    )
