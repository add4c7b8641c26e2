"""
Brute-force oracle for quiver representations over the two-element field.

Everything here is exhaustive and exact at desk scale: subrepresentations
are enumerated as echelonized subspace tuples, membership in an
extension-closed subcategory is decided by decomposing against a complete
catalogue of indecomposables (or by an explicit predicate), and
composition series, subobject posets and conflation lists are computed by
direct search.  The ground field is always F2, which keeps every subspace
lattice finite.
"""
from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import gf2

DEFAULT_DIMENSION_BOUND = 8
ENUMERATION_CAP = 4_000_000


class AlgebraMismatch(ValueError):
    pass


class SingularSystem(ValueError):
    """The catalogue cannot be complete: its Hom-count matrix is singular."""


class NegativeMultiplicity(ValueError):
    """Hom counts are inconsistent with any direct-sum decomposition."""


class DimensionBoundExceeded(RuntimeError):
    pass


class EnumerationOverflow(RuntimeError):
    pass


class NotMember(ValueError):
    pass


class InvalidSpec(ValueError):
    pass


def dimension_bound() -> int:
    return int(os.environ.get("JHP_LAB_BOUND", str(DEFAULT_DIMENSION_BOUND)))


# ---------------------------------------------------------------------------
# algebras and representations


@dataclass(frozen=True)
class PresentedAlgebra:
    """A quiver with monomial relations; loops and parallel arrows allowed.

    Arrows are (name, source, target) with 1-based vertices.  A relation is
    a composable path given by arrow indices in traversal order; its
    composite must act as zero on every representation.
    """

    vertices: int
    arrows: tuple[tuple[str, int, int], ...]
    relations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for name, s, t in self.arrows:
            if not (1 <= s <= self.vertices and 1 <= t <= self.vertices):
                raise InvalidSpec(f"arrow {name}: {s} -> {t} leaves the quiver")
        for rel in self.relations:
            if not rel:
                raise InvalidSpec("empty relation path")
            for a, b in zip(rel, rel[1:]):
                if self.arrows[a][2] != self.arrows[b][1]:
                    raise InvalidSpec(f"relation path {rel} is not composable")
        self._check_finite_dimensional()

    def _check_finite_dimensional(self, cap: int = 32) -> None:
        # grow relation-free paths; for a finite-dimensional monomial
        # algebra this terminates well before the cap
        rels = set(self.relations)

        def blocked(path: tuple[int, ...]) -> bool:
            return any(
                path[k : k + len(r)] in rels
                for r in rels
                for k in range(len(path) - len(r) + 1)
            )

        frontier = [(a,) for a in range(len(self.arrows)) if not blocked((a,))]
        for _ in range(cap):
            if not frontier:
                return
            nxt = []
            for path in frontier:
                t = self.arrows[path[-1]][2]
                for a, (_, s, _) in enumerate(self.arrows):
                    if s == t and not blocked(path + (a,)):
                        nxt.append(path + (a,))
            frontier = nxt
        raise InvalidSpec("algebra is not finite-dimensional (unbounded paths)")

    def arrow_index(self, name: str) -> int:
        for k, (nm, _, _) in enumerate(self.arrows):
            if nm == name:
                return k
        raise InvalidSpec(f"no arrow named {name!r}")


def parse_algebra(text: str) -> PresentedAlgebra:
    """Parse the algebra spec format::

        vertices: 2
        arrow a: 2 -> 1
        arrow b: 1 -> 1
        relation b b
    """
    vertices = None
    arrows: list[tuple[str, int, int]] = []
    rel_names: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            vertices = int(line.split(":", 1)[1])
        elif line.startswith("arrow"):
            m = re.fullmatch(r"arrow\s+(\w+)\s*:\s*(\d+)\s*->\s*(\d+)", line)
            if not m:
                raise InvalidSpec(f"bad arrow line: {raw!r}")
            arrows.append((m.group(1), int(m.group(2)), int(m.group(3))))
        elif line.startswith("relation"):
            rel_names.append(line.split()[1:])
        else:
            raise InvalidSpec(f"unrecognized line: {raw!r}")
    if vertices is None:
        raise InvalidSpec("missing 'vertices:' line")
    index = {name: k for k, (name, _, _) in enumerate(arrows)}
    relations = tuple(tuple(index[n] for n in rel) for rel in rel_names)
    return PresentedAlgebra(vertices, tuple(arrows), relations)


@dataclass(frozen=True)
class Rep:
    """A representation: one F2 vector space per vertex, one map per arrow.

    The map of arrow a (source s, target t) is a tuple of dims[s-1] column
    vectors over the dims[t-1] target coordinates.
    """

    algebra: PresentedAlgebra
    dims: tuple[int, ...]
    maps: tuple[gf2.Cols, ...]

    def __post_init__(self) -> None:
        if len(self.dims) != self.algebra.vertices:
            raise InvalidSpec("dimension vector has wrong length")
        if len(self.maps) != len(self.algebra.arrows):
            raise InvalidSpec("need one matrix per arrow")
        for cols, (name, s, t) in zip(self.maps, self.algebra.arrows):
            if len(cols) != self.dims[s - 1]:
                raise InvalidSpec(f"matrix of {name} has wrong source dimension")
            if any(c >> self.dims[t - 1] for c in cols):
                raise InvalidSpec(f"matrix of {name} has wrong target dimension")
        for rel in self.algebra.relations:
            cols = gf2.identity_cols(self.dims[self.algebra.arrows[rel[0]][1] - 1])
            for a in rel:
                cols = gf2.compose_cols(self.maps[a], cols)
            if any(cols):
                raise InvalidSpec(f"relation {rel} does not vanish")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0


def zero_rep(algebra: PresentedAlgebra) -> Rep:
    return Rep(algebra, (0,) * algebra.vertices, tuple(() for _ in algebra.arrows))


def direct_sum(algebra: PresentedAlgebra, reps: list[Rep]) -> Rep:
    for r in reps:
        if r.algebra != algebra:
            raise AlgebraMismatch("direct sum across different algebras")
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(algebra.vertices))
    maps = []
    for a, (_, s, t) in enumerate(algebra.arrows):
        cols: list[int] = []
        t_off = 0
        for r in reps:
            cols.extend(c << t_off for c in r.maps[a])
            t_off += r.dims[t - 1]
        maps.append(tuple(cols))
    return Rep(algebra, dims, tuple(maps))


def format_rep(rep: Rep) -> str:
    """Serialize as a dimension vector plus row-major 0/1 matrices."""
    lines = ["dims: " + ",".join(str(d) for d in rep.dims)]
    for cols, (name, s, t) in zip(rep.maps, rep.algebra.arrows):
        rows = []
        for r in range(rep.dims[t - 1]):
            rows.append("".join(str(c >> r & 1) for c in cols))
        lines.append(f"map {name}: " + " ".join(rows))
    return "\n".join(lines) + "\n"


def parse_rep(text: str, algebra: PresentedAlgebra) -> Rep:
    dims = None
    rows_by_arrow: dict[str, list[str]] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dims:"):
            dims = tuple(int(x) for x in line.split(":", 1)[1].split(","))
        elif line.startswith("map"):
            m = re.fullmatch(r"map\s+(\w+)\s*:\s*([01\s]*)", line)
            if not m:
                raise InvalidSpec(f"bad map line: {raw!r}")
            rows_by_arrow[m.group(1)] = m.group(2).split()
        else:
            raise InvalidSpec(f"unrecognized line: {raw!r}")
    if dims is None:
        raise InvalidSpec("missing 'dims:' line")
    maps = []
    for name, s, t in algebra.arrows:
        rows = rows_by_arrow.get(name, [])
        if len(rows) != dims[t - 1] or any(len(r) != dims[s - 1] for r in rows):
            if dims[t - 1] == 0 or dims[s - 1] == 0:
                maps.append((0,) * dims[s - 1])
                continue
            raise InvalidSpec(f"map {name} has the wrong shape")
        cols = []
        for c in range(dims[s - 1]):
            cols.append(sum(1 << r for r in range(dims[t - 1]) if rows[r][c] == "1"))
        maps.append(tuple(cols))
    return Rep(algebra, dims, tuple(maps))


def all_reps(algebra: PresentedAlgebra, dims: tuple[int, ...]):
    """Every representation with the given dimension vector (no iso dedup)."""
    spaces = []
    for _, s, t in algebra.arrows:
        ds, dt = dims[s - 1], dims[t - 1]
        spaces.append(list(product(range(1 << dt), repeat=ds)))
    count = 1
    for sp in spaces:
        count *= len(sp)
        if count > ENUMERATION_CAP:
            raise EnumerationOverflow("too many representations to enumerate")
    for maps in product(*spaces):
        try:
            yield Rep(algebra, dims, tuple(tuple(m) for m in maps))
        except InvalidSpec:
            continue


# ---------------------------------------------------------------------------
# homomorphisms, isomorphism, decomposition


def _hom_system(A: Rep, B: Rep) -> tuple[list[int], int]:
    """Linear system for graded maps A -> B commuting with all arrows."""
    if A.algebra != B.algebra:
        raise AlgebraMismatch("Hom between representations of different algebras")
    nv = A.algebra.vertices
    offset = []
    total = 0
    for v in range(nv):
        offset.append(total)
        total += A.dims[v] * B.dims[v]

    def unknown(v: int, row: int, col: int) -> int:
        # entry (row, col) of phi_v : A_v -> B_v
        return offset[v] + col * B.dims[v] + row

    rows = []
    for a, (_, s, t) in enumerate(A.algebra.arrows):
        s -= 1
        t -= 1
        for c in range(A.dims[s]):
            u = A.maps[a][c]  # image of source basis vector c in A_t
            for r in range(B.dims[t]):
                eq = 0
                k = u
                while k:
                    low = k & -k
                    eq ^= 1 << unknown(t, r, low.bit_length() - 1)
                    k ^= low
                for m in range(B.dims[s]):
                    if B.maps[a][m] >> r & 1:
                        eq ^= 1 << unknown(s, m, c)
                rows.append(eq)
    return rows, total


def hom_dim(A: Rep, B: Rep) -> int:
    """Dimension over F2 of the homomorphism space A -> B."""
    rows, total = _hom_system(A, B)
    return gf2.nullity(rows, total)


def _phi_from_vector(A: Rep, B: Rep, vec: int) -> list[gf2.Cols]:
    nv = A.algebra.vertices
    out = []
    pos = 0
    for v in range(nv):
        cols = []
        for _ in range(A.dims[v]):
            cols.append(vec >> pos & ((1 << B.dims[v]) - 1))
            pos += B.dims[v]
        out.append(tuple(cols))
    return out


def rep_iso(A: Rep, B: Rep) -> bool:
    """Isomorphism test by searching the homomorphism space."""
    if A.dims != B.dims:
        return False
    if A.total_dim == 0:
        return True
    rows, total = _hom_system(A, B)
    basis = gf2.nullspace(rows, total)
    if len(basis) != hom_dim(B, A):
        return False
    if len(basis) > 20:
        raise EnumerationOverflow("homomorphism space too large for iso search")
    for mask in range(1, 1 << len(basis)):
        vec = 0
        k = mask
        while k:
            low = k & -k
            vec ^= basis[low.bit_length() - 1]
            k ^= low
        phi = _phi_from_vector(A, B, vec)
        if all(gf2.invertible(cols, A.dims[v]) for v, cols in enumerate(phi)):
            return True
    return False


def _solve_rational(H: list[list[int]], h: list[int]) -> list[Fraction]:
    n = len(H)
    M = [[Fraction(x) for x in row] + [Fraction(h[k])] for k, row in enumerate(H)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise SingularSystem("Hom-count matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


# ---------------------------------------------------------------------------
# membership in an extension-closed subcategory


class Membership:
    """A subcategory of the module category, with a membership test.

    Either additive over a subset of a complete indecomposable catalogue,
    or cut out by a predicate on dimension vectors or on representations.
    A complete catalogue, when present, also powers `decompose`.
    """

    def __init__(
        self,
        algebra: PresentedAlgebra,
        catalogue: tuple[Rep, ...] = (),
        labels: tuple[str, ...] = (),
        allowed: frozenset[int] | None = None,
        dim_pred=None,
        rep_pred=None,
        complete: bool = False,
        name: str = "",
    ) -> None:
        self.algebra = algebra
        self.catalogue = catalogue
        self.labels = labels or tuple(f"C{k}" for k in range(len(catalogue)))
        self.allowed = allowed
        self.dim_pred = dim_pred
        self.rep_pred = rep_pred
        self.complete = complete
        self.name = name or "E"
        self._hom_inverse: list[list[Fraction]] | None = None
        self._iso_memo: list[tuple[Rep, tuple]] = []

    # -- constructors

    @classmethod
    def full(cls, catalogue: tuple[Rep, ...], labels=(), name="mod") -> "Membership":
        algebra = catalogue[0].algebra
        return cls(algebra, catalogue, labels, complete=True, name=name)

    @classmethod
    def additive(
        cls, catalogue: tuple[Rep, ...], allowed: frozenset[int], labels=(), name="E"
    ) -> "Membership":
        algebra = catalogue[0].algebra
        return cls(algebra, catalogue, labels, allowed=allowed, complete=True, name=name)

    @classmethod
    def dims_only(
        cls, catalogue: tuple[Rep, ...], dim_pred, labels=(), name="E"
    ) -> "Membership":
        algebra = catalogue[0].algebra
        return cls(
            algebra, catalogue, labels, dim_pred=dim_pred, complete=True, name=name
        )

    @classmethod
    def predicate(
        cls,
        algebra: PresentedAlgebra,
        rep_pred,
        catalogue: tuple[Rep, ...] = (),
        labels=(),
        complete: bool = False,
        name="E",
    ) -> "Membership":
        return cls(
            algebra,
            catalogue,
            labels,
            rep_pred=rep_pred,
            complete=complete,
            name=name,
        )

    # -- membership

    def contains_dims(self, dims: tuple[int, ...]) -> bool | None:
        """Fast path when membership depends only on the dimension vector."""
        if self.dim_pred is not None:
            return bool(self.dim_pred(dims))
        if self.allowed is None and self.rep_pred is None:
            return True  # full subcategory
        return None

    def contains(self, rep: Rep) -> bool:
        quick = self.contains_dims(rep.dims)
        if quick is not None:
            return quick
        if self.rep_pred is not None:
            return bool(self.rep_pred(rep))
        dec = self.decompose(rep)
        return all(k in self.allowed for k in dec)

    # -- decomposition against the catalogue

    def _inverse_hom_matrix(self) -> list[list[Fraction]]:
        if self._hom_inverse is None:
            n = len(self.catalogue)
            H = [
                [hom_dim(self.catalogue[i], self.catalogue[j]) for j in range(n)]
                for i in range(n)
            ]
            cols = []
            for j in range(n):
                e = [1 if i == j else 0 for i in range(n)]
                cols.append(_solve_rational(H, e))
            self._hom_inverse = [[cols[j][i] for j in range(n)] for i in range(n)]
        return self._hom_inverse

    def decompose(self, rep: Rep) -> Counter:
        """Multiplicities of the catalogue entries in rep."""
        if not self.complete:
            return self.classify(rep)
        inv = self._inverse_hom_matrix()
        h = [hom_dim(c, rep) for c in self.catalogue]
        out = Counter()
        for k, row in enumerate(inv):
            x = sum(f * v for f, v in zip(row, h))
            if x.denominator != 1 or x < 0:
                raise NegativeMultiplicity(f"no decomposition: multiplicity {x}")
            if x:
                out[k] = int(x)
        dims = tuple(
            sum(out[k] * c.dims[v] for k, c in enumerate(self.catalogue))
            for v in range(self.algebra.vertices)
        )
        if dims != rep.dims:
            raise NegativeMultiplicity("decomposition does not match dimensions")
        return out

    def classify(self, rep: Rep) -> Counter:
        """Iso-search fallback for incomplete catalogues (small dims)."""
        for seen, key in self._iso_memo:
            if seen.dims == rep.dims and rep_iso(seen, rep):
                return Counter(dict(key))
        target = rep.dims

        def candidates(start: int, remaining: tuple[int, ...], acc: Counter):
            if all(d == 0 for d in remaining):
                yield Counter(acc)
                return
            for k in range(start, len(self.catalogue)):
                cd = self.catalogue[k].dims
                if all(c <= r for c, r in zip(cd, remaining)) and any(cd):
                    acc[k] += 1
                    rest = tuple(r - c for r, c in zip(remaining, cd))
                    yield from candidates(k, rest, acc)
                    acc[k] -= 1

        for cand in candidates(0, target, Counter()):
            summed = direct_sum(
                self.algebra,
                [self.catalogue[k] for k in sorted(cand.elements())],
            )
            if rep_iso(summed, rep):
                self._iso_memo.append((rep, tuple(sorted(cand.items()))))
                return cand
        raise NegativeMultiplicity("representation not built from the catalogue")

    def iso_key(self, rep: Rep) -> tuple:
        return tuple(sorted(self.decompose(rep).elements()))

    def label_of(self, classes: Counter) -> str:
        if not classes:
            return "0"
        bits = []
        for k in sorted(classes):
            m = classes[k]
            bits.append(self.labels[k] if m == 1 else f"{m}*{self.labels[k]}")
        return "+".join(bits)


def decompose(rep: Rep, membership: Membership) -> Counter:
    return membership.decompose(rep)


class SubquotClassifier:
    """Class lookup for subobjects and quotients of one fixed object.

    Decomposition classes are read off Hom-count fingerprints: maps from a
    catalogue object C into a subspace tuple U are the maps into X whose
    image lands in U, and maps from X/U out to C are the maps from X that
    kill U.  Both are linear conditions on precomputed Hom bases, so no
    sub- or quotient representation is ever materialized.
    """

    def __init__(self, E: Membership, X: Rep):
        if not E.complete:
            raise InvalidSpec("fingerprint classification needs a complete catalogue")
        self.E = E
        self.X = X
        nv = X.algebra.vertices
        self.into: list[list[list[gf2.Cols]]] = []
        self.outof: list[list[list[gf2.Cols]]] = []
        for C in E.catalogue:
            rows, total = _hom_system(C, X)
            self.into.append(
                [_phi_from_vector(C, X, v) for v in gf2.nullspace(rows, total)]
            )
            rows, total = _hom_system(X, C)
            self.outof.append(
                [_phi_from_vector(X, C, v) for v in gf2.nullspace(rows, total)]
            )
        Hinv = E._inverse_hom_matrix()
        self._Hinv = Hinv
        self._HTinv = [list(col) for col in zip(*Hinv)]
        self._sub_cache: dict = {}
        self._quot_cache: dict = {}

    def _resolve(self, fingerprint: tuple[int, ...], matrix) -> Counter:
        out = Counter()
        for k, row in enumerate(matrix):
            x = sum(f * v for f, v in zip(row, fingerprint))
            if x.denominator != 1 or x < 0:
                raise NegativeMultiplicity(
                    f"inconsistent Hom fingerprint {fingerprint}"
                )
            if x:
                out[k] = int(x)
        return out

    def sub_class(self, S: SubRep) -> Counter:
        nv = self.X.algebra.vertices
        fingerprint = []
        for basis in self.into:
            if not basis:
                fingerprint.append(0)
                continue
            rows = []
            for v in range(nv):
                ech = S.bases[v]
                if len(ech) == self.X.dims[v]:
                    continue
                width = len(basis[0][v])
                for c in range(width):
                    residuals = [
                        gf2.reduce_vec(ech, phi[v][c]) for phi in basis
                    ]
                    for b in range(self.X.dims[v]):
                        row = 0
                        for k, r in enumerate(residuals):
                            if r >> b & 1:
                                row |= 1 << k
                        if row:
                            rows.append(row)
            fingerprint.append(len(basis) - gf2.rank(rows))
        key = tuple(fingerprint)
        if key not in self._sub_cache:
            self._sub_cache[key] = self._resolve(key, self._Hinv)
        return self._sub_cache[key]

    def quot_class(self, S: SubRep) -> Counter:
        nv = self.X.algebra.vertices
        fingerprint = []
        for i, basis in enumerate(self.outof):
            if not basis:
                fingerprint.append(0)
                continue
            cdims = self.E.catalogue[i].dims
            rows = []
            for v in range(nv):
                for u in S.bases[v]:
                    images = [gf2.apply_cols(psi[v], u) for psi in basis]
                    for b in range(cdims[v]):
                        row = 0
                        for k, img in enumerate(images):
                            if img >> b & 1:
                                row |= 1 << k
                        if row:
                            rows.append(row)
            fingerprint.append(len(basis) - gf2.rank(rows))
        key = tuple(fingerprint)
        if key not in self._quot_cache:
            self._quot_cache[key] = self._resolve(key, self._HTinv)
        return self._quot_cache[key]

    def classes(self, S: SubRep) -> tuple[Counter, Counter]:
        return self.sub_class(S), self.quot_class(S)


# ---------------------------------------------------------------------------
# subrepresentations


@dataclass(frozen=True)
class SubRep:
    """An arrow-stable tuple of subspaces, one echelon basis per vertex."""

    bases: tuple[gf2.Echelon, ...]

    @property
    def total_dim(self) -> int:
        return sum(len(b) for b in self.bases)

    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


@lru_cache(maxsize=None)
def _subspace_list(dim: int) -> tuple[gf2.Echelon, ...]:
    return tuple(gf2.subspaces(dim))


def enumerate_subreps(X: Rep, bound: int | None = None) -> list[SubRep]:
    """All arrow-stable subspace tuples of X, including 0 and X."""
    if bound is None:
        bound = dimension_bound()
    if X.total_dim > bound:
        raise DimensionBoundExceeded(
            f"total dimension {X.total_dim} exceeds bound {bound}"
        )
    nv = X.algebra.vertices
    arrows = [(a, s - 1, t - 1) for a, (_, s, t) in enumerate(X.algebra.arrows)]
    check_at = [[] for _ in range(nv)]
    for a, s, t in arrows:
        check_at[max(s, t)].append((a, s, t))
    out: list[SubRep] = []
    chosen: list[gf2.Echelon] = [()] * nv

    def stable(a: int, s: int, t: int) -> bool:
        cols = X.maps[a]
        target = chosen[t]
        return all(gf2.in_span(target, gf2.apply_cols(cols, u)) for u in chosen[s])

    def walk(v: int) -> None:
        if v == nv:
            out.append(SubRep(tuple(chosen)))
            return
        for sub in _subspace_list(X.dims[v]):
            chosen[v] = sub
            if all(stable(a, s, t) for a, s, t in check_at[v]):
                walk(v + 1)

    walk(0)
    return out


def zero_sub(X: Rep) -> SubRep:
    return SubRep(tuple(() for _ in range(X.algebra.vertices)))


def full_sub(X: Rep) -> SubRep:
    return SubRep(tuple(gf2.identity_cols(d) for d in X.dims))


def sub_rep(X: Rep, S: SubRep) -> Rep:
    """The subrepresentation carried by S, in its own coordinates."""
    dims = S.dims()
    maps = []
    for a, (_, s, t) in enumerate(X.algebra.arrows):
        cols = []
        for u in S.bases[s - 1]:
            w = gf2.apply_cols(X.maps[a], u)
            cols.append(gf2.coords_in_span(S.bases[t - 1], w))
        maps.append(tuple(cols))
    return Rep(X.algebra, dims, tuple(maps))


def quotient_rep(X: Rep, S: SubRep) -> Rep:
    """X/S in the coordinates of the non-pivot positions of S."""
    nv = X.algebra.vertices
    rest = []
    for v in range(nv):
        pivots = {gf2.pivot(r) for r in S.bases[v]}
        rest.append([c for c in range(X.dims[v]) if c not in pivots])

    def project(v: int, w: int) -> int:
        w = gf2.reduce_vec(S.bases[v], w)
        out = 0
        for k, c in enumerate(rest[v]):
            if w >> c & 1:
                out |= 1 << k
        return out

    dims = tuple(len(r) for r in rest)
    maps = []
    for a, (_, s, t) in enumerate(X.algebra.arrows):
        cols = []
        for c in rest[s - 1]:
            cols.append(project(t - 1, gf2.apply_cols(X.maps[a], 1 << c)))
        maps.append(tuple(cols))
    return Rep(X.algebra, dims, tuple(maps))


def section_quotient(X: Rep, U: SubRep, V: SubRep) -> Rep:
    """The representation V/U for nested stable subspace tuples U <= V."""
    Vrep = sub_rep(X, V)
    inner = SubRep(
        tuple(
            gf2.rref(gf2.coords_in_span(V.bases[v], u) for u in U.bases[v])
            for v in range(X.algebra.vertices)
        )
    )
    return quotient_rep(Vrep, inner)


def sub_contains(V: SubRep, U: SubRep) -> bool:
    return all(gf2.contains(v, u) for v, u in zip(V.bases, U.bases))


# ---------------------------------------------------------------------------
# admissible subobject posets


@dataclass
class SubobjectPoset:
    """Subobjects U of X with U and X/U in E, ordered by U <= V iff
    U is contained in V and V/U lies in E."""

    X: Rep
    membership: Membership
    elements: list[SubRep]
    down: list[int]  # down[i] = bitmask of j with elements[j] <= elements[i]
    up: list[int]

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)


def _order_pair(X: Rep, E: Membership, U: SubRep, V: SubRep) -> bool:
    if not sub_contains(V, U):
        return False
    qdims = tuple(dv - du for dv, du in zip(V.dims(), U.dims()))
    quick = E.contains_dims(qdims)
    if quick is not None:
        return quick
    return E.contains(section_quotient(X, U, V))


def admissible_subreps(X: Rep, E: Membership, bound: int | None = None) -> list[SubRep]:
    out = []
    for S in enumerate_subreps(X, bound):
        inok = E.contains_dims(S.dims())
        if inok is None:
            inok = E.contains(sub_rep(X, S))
        if not inok:
            continue
        qdims = tuple(d - sd for d, sd in zip(X.dims, S.dims()))
        outok = E.contains_dims(qdims)
        if outok is None:
            outok = E.contains(quotient_rep(X, S))
        if outok:
            out.append(S)
    out.sort(key=lambda s: (s.total_dim, s.bases))
    return out


def admissible_poset(X: Rep, E: Membership, bound: int | None = None) -> SubobjectPoset:
    if not E.contains(X):
        raise NotMember("X does not belong to the subcategory")
    elems = admissible_subreps(X, E, bound)
    n = len(elems)
    down = [0] * n
    up = [0] * n
    for i in range(n):
        down[i] |= 1 << i
        up[i] |= 1 << i
        for j in range(n):
            if (
                j != i
                and elems[j].total_dim < elems[i].total_dim
                and _order_pair(X, E, elems[j], elems[i])
            ):
                down[i] |= 1 << j
                up[j] |= 1 << i
    return SubobjectPoset(X, E, elems, down, up)


@dataclass(frozen=True)
class PosetProperties:
    is_lattice: bool
    is_modular: bool


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _unique_extreme(P: SubobjectPoset, pool: int, want_max: bool) -> int | None:
    """Index of the unique maximal (or minimal) element of `pool`, else None."""
    sets = P.down if want_max else P.up
    found = None
    for i in _bits(pool):
        if sets[i] & pool == pool:
            return i  # comparable to everything in the pool: the extreme
    for i in _bits(pool):
        # i is maximal iff nothing else in the pool lies above it
        above = (P.up if want_max else P.down)[i] & pool & ~(1 << i)
        if above == 0:
            if found is not None:
                return None
            found = i
    return found


def meet_index(P: SubobjectPoset, i: int, j: int) -> int | None:
    return _unique_extreme(P, P.down[i] & P.down[j], want_max=True)


def join_index(P: SubobjectPoset, i: int, j: int) -> int | None:
    return _unique_extreme(P, P.up[i] & P.up[j], want_max=False)


def poset_properties(P: SubobjectPoset) -> PosetProperties:
    n = len(P)
    meets = {}
    joins = {}
    for i in range(n):
        for j in range(i + 1, n):
            m = meet_index(P, i, j)
            if m is None:
                return PosetProperties(False, False)
            v = join_index(P, i, j)
            if v is None:
                return PosetProperties(False, False)
            meets[i, j] = meets[j, i] = m
            joins[i, j] = joins[j, i] = v

    def meet(i, j):
        return i if i == j else meets[i, j]

    def join(i, j):
        return i if i == j else joins[i, j]

    for a in range(n):
        for b in _bits(P.up[a]):  # a <= b
            for x in range(n):
                if meet(join(x, a), b) != join(meet(x, b), a):
                    return PosetProperties(True, False)
    return PosetProperties(True, True)


# ---------------------------------------------------------------------------
# composition series


@dataclass(frozen=True)
class SeriesReport:
    is_simple: bool
    factor_multisets: frozenset[tuple]
    factor_labels: frozenset[tuple[str, ...]]
    lengths: frozenset[int]
    jhp_holds: bool
    unique_length: bool
    nu_max: int


class _IsoMemo:
    """Iso-class memo usable with or without a complete catalogue."""

    def __init__(self, E: Membership):
        self.E = E
        self.store: dict = {}
        self.raw: list[tuple[Rep, object]] = []

    def key(self, rep: Rep):
        if self.E.complete:
            return self.E.iso_key(rep)
        for seen, k in self.raw:
            if seen.dims == rep.dims and rep_iso(seen, rep):
                return k
        k = ("raw", len(self.raw))
        self.raw.append((rep, k))
        return k


def is_simple_object(X: Rep, E: Membership, bound: int | None = None) -> bool:
    """Is X simple in E, i.e. are 0 and X its only admissible subobjects?"""
    if X.is_zero():
        return False
    for S in enumerate_subreps(X, bound):
        if S.total_dim in (0, X.total_dim):
            continue
        inok = E.contains_dims(S.dims())
        if inok is None:
            inok = E.contains(sub_rep(X, S))
        if not inok:
            continue
        qdims = tuple(d - sd for d, sd in zip(X.dims, S.dims()))
        outok = E.contains_dims(qdims)
        if outok is None:
            outok = E.contains(quotient_rep(X, S))
        if outok:
            return False
    return True


class SeriesAnalyzer:
    """Composition-series search with memoization shared across objects.

    Walks maximal chains bottom-up: each first step is a simple admissible
    subobject, and the rest of any chain is a maximal chain of the
    quotient (the interval above a subobject is isomorphic to the
    subobject poset of the quotient).  Chain sets are memoized by
    isomorphism class, so analyzing many objects of one subcategory
    shares all the work.  With a complete catalogue and no representation
    predicate, classes of subobjects and quotients are read off Hom
    fingerprints and quotients are rebuilt as canonical direct sums.
    """

    def __init__(self, E: Membership, bound: int | None = None):
        self.E = E
        self.bound = bound
        self.fast = E.complete and E.rep_pred is None
        # additive and full memberships are closed under direct summands,
        # so their simple objects are indecomposable; dims-restricted ones
        # are not (a simple object may decompose as a module)
        self.summand_closed = E.rep_pred is None and E.dim_pred is None
        self._memo = _IsoMemo(E)
        self._simple: dict = {}
        self._chains: dict = {}

    def _is_simple(self, rep: Rep) -> bool:
        k = self._memo.key(rep)
        if k not in self._simple:
            self._simple[k] = is_simple_object(rep, self.E, self.bound)
        return self._simple[k]

    def _canonical(self, classes: Counter) -> Rep:
        parts = [self.E.catalogue[k] for k in sorted(classes.elements())]
        return direct_sum(self.E.algebra, parts)

    def _class_simple(self, key: tuple[int, ...]) -> bool:
        if key not in self._simple:
            self._simple[key] = is_simple_object(
                self._canonical(Counter(key)), self.E, self.bound
            )
        return self._simple[key]

    def _allowed(self, classes: Counter) -> bool:
        if self.E.allowed is None:
            return True
        return all(k in self.E.allowed for k in classes)

    def _chains_fast(self, classes: Counter) -> frozenset[tuple]:
        key = tuple(sorted(classes.elements()))
        if key in self._chains:
            return self._chains[key]
        if not key:
            result = frozenset({()})
        else:
            rep = self._canonical(classes)
            clf = SubquotClassifier(self.E, rep)
            out = set()
            seen_steps = set()
            for S in enumerate_subreps(rep, self.bound):
                if S.total_dim == 0:
                    continue
                if self.E.contains_dims(S.dims()) is False:
                    continue
                qdims = tuple(d - sd for d, sd in zip(rep.dims, S.dims()))
                if self.E.contains_dims(qdims) is False:
                    continue
                csub = clf.sub_class(S)
                if self.summand_closed and sum(csub.values()) != 1:
                    continue  # simple objects are indecomposable here
                if not self._allowed(csub):
                    continue
                sub_key = tuple(sorted(csub.elements()))
                if not self._class_simple(sub_key):
                    continue
                cquot = clf.quot_class(S)
                if not self._allowed(cquot):
                    continue
                step = (sub_key, tuple(sorted(cquot.elements())))
                if step in seen_steps:
                    continue
                seen_steps.add(step)
                for tail in self._chains_fast(cquot):
                    out.add(tuple(sorted(tail + (sub_key,))))
            result = frozenset(out)
        self._chains[key] = result
        return result

    def _chains_slow(self, rep: Rep) -> frozenset[tuple]:
        E = self.E
        k = self._memo.key(rep)
        if k in self._chains:
            return self._chains[k]
        if rep.is_zero():
            result = frozenset({()})
        else:
            out = set()
            seen_steps = set()
            for S in enumerate_subreps(rep, self.bound):
                if S.total_dim == 0:
                    continue
                inok = E.contains_dims(S.dims())
                if inok is None:
                    inok = E.contains(sub_rep(rep, S))
                if not inok:
                    continue
                qdims = tuple(d - sd for d, sd in zip(rep.dims, S.dims()))
                outok = E.contains_dims(qdims)
                sub = sub_rep(rep, S)
                quot = quotient_rep(rep, S)
                if outok is None:
                    outok = E.contains(quot)
                if not outok or not self._is_simple(sub):
                    continue
                step = (self._memo.key(sub), self._memo.key(quot))
                if step in seen_steps:
                    continue
                seen_steps.add(step)
                for tail in self._chains_slow(quot):
                    out.add(tuple(sorted(tail + (step[0],))))
            result = frozenset(out)
        self._chains[k] = result
        return result

    def analyze(self, X: Rep) -> SeriesReport:
        if not self.E.contains(X):
            raise NotMember("X does not belong to the subcategory")
        if self.fast:
            classes = self.E.decompose(X)
            multisets = self._chains_fast(classes)
            simple = self._class_simple(tuple(sorted(classes.elements())))
        else:
            multisets = self._chains_slow(X)
            simple = self._is_simple(X)
        labels = frozenset(
            tuple(_label_key(self.E, k) for k in m) for m in multisets
        )
        lengths = frozenset(len(m) for m in multisets)
        return SeriesReport(
            is_simple=simple,
            factor_multisets=multisets,
            factor_labels=labels,
            lengths=lengths,
            jhp_holds=len(multisets) <= 1,
            unique_length=len(lengths) <= 1,
            nu_max=max(lengths) if lengths else 0,
        )


def series_analysis(X: Rep, E: Membership, bound: int | None = None) -> SeriesReport:
    """All composition series data of X in E, by exhaustive chain search."""
    return SeriesAnalyzer(E, bound).analyze(X)


def _label_key(E: Membership, key) -> str:
    if isinstance(key, tuple) and key and key[0] == "raw":
        return f"X{key[1]}"
    return E.label_of(Counter(key))


# ---------------------------------------------------------------------------
# conflation harvesting


def _multisets_up_to(lengths: list[int], maxlen: int):
    """Nonempty multisets over range(len(lengths)) with bounded total length."""
    n = len(lengths)
    acc = [0] * n

    def walk(k: int, budget: int):
        if k == n:
            if budget < maxlen:  # something was consumed
                yield tuple(acc)
            return
        top = budget // lengths[k]
        for m in range(top + 1):
            acc[k] = m
            yield from walk(k + 1, budget - m * lengths[k])
        acc[k] = 0

    yield from walk(0, maxlen)


def _support_blocks(E: Membership, multiset: tuple[int, ...]) -> int:
    """Number of vertex-support components among the summands."""
    idx = [k for k, m in enumerate(multiset) if m]
    supports = [
        frozenset(v for v, d in enumerate(E.catalogue[k].dims) if d) for k in idx
    ]
    parent = list(range(len(idx)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if supports[i] & supports[j]:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(idx))})


def conflations_up_to(
    E: Membership,
    maxlen: int,
    iso_enumerator=None,
    bound: int | None = None,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All middle-vs-ends relation pairs from conflations in E.

    Pairs are (class of Y, class of U plus class of Y/U) as multiplicity
    words over the catalogue, for every subobject U of every Y in E with
    total length at most `maxlen` such that U and Y/U lie in E.  Split
    pairs (both sides equal) are dropped.

    For additive memberships two reductions are applied; both only discard
    pairs that follow from retained ones by adding a common summand:
    direct sums with vertex-disjoint summand groups, and isotypic powers
    of a one-dimensional summand (semisimple, so all their pairs split).
    """
    if bound is None:
        bound = dimension_bound()
    if maxlen > bound:
        raise DimensionBoundExceeded(
            f"middle length {maxlen} exceeds the dimension bound {bound}"
        )
    pairs: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    summand_closed = E.rep_pred is None and E.dim_pred is None

    if iso_enumerator is not None:
        sources = [
            (None, Y) for ln in range(1, maxlen + 1) for Y in iso_enumerator(ln)
        ]
    else:
        if not E.complete:
            raise InvalidSpec("need a complete catalogue or an iso enumerator")
        lengths = [c.total_dim for c in E.catalogue]
        live = (
            sorted(E.allowed)
            if E.allowed is not None
            else list(range(len(E.catalogue)))
        )
        sources = []
        for small in _multisets_up_to([lengths[k] for k in live], maxlen):
            word = [0] * len(E.catalogue)
            for pos, m in zip(live, small):
                word[pos] = m
            word = tuple(word)
            if E.dim_pred is not None:
                dims = tuple(
                    sum(word[k] * c.dims[v] for k, c in enumerate(E.catalogue))
                    for v in range(E.algebra.vertices)
                )
                if not E.dim_pred(dims):
                    continue
            if summand_closed:
                if _support_blocks(E, word) > 1:
                    continue
                only = [k for k, m in enumerate(word) if m]
                if (
                    len(only) == 1
                    and word[only[0]] > 1
                    and E.catalogue[only[0]].total_dim == 1
                ):
                    continue
            sources.append((word, None))

    fingerprints = E.complete and E.rep_pred is None
    for word, Y in sources:
        if Y is None:
            parts = []
            for k, m in enumerate(word):
                parts.extend([E.catalogue[k]] * m)
            Y = direct_sum(E.algebra, parts)
            y_word = word
        else:
            y_word = _word_of(E, E.decompose(Y))
        clf = SubquotClassifier(E, Y) if fingerprints else None
        for S in enumerate_subreps(Y, bound):
            if S.total_dim in (0, Y.total_dim):
                continue
            inok = E.contains_dims(S.dims())
            qdims = tuple(d - sd for d, sd in zip(Y.dims, S.dims()))
            outok = E.contains_dims(qdims)
            if inok is False or outok is False:
                continue
            if fingerprints:
                csub = clf.sub_class(S)
                if E.allowed is not None and any(k not in E.allowed for k in csub):
                    continue
                cquot = clf.quot_class(S)
                if E.allowed is not None and any(k not in E.allowed for k in cquot):
                    continue
                rhs = _word_of(E, csub + cquot)
            else:
                sub = sub_rep(Y, S)
                if inok is None and not E.contains(sub):
                    continue
                quot = quotient_rep(Y, S)
                if outok is None and not E.contains(quot):
                    continue
                rhs = _word_of(E, E.decompose(sub) + E.decompose(quot))
            if rhs != y_word:
                pairs.add((y_word, rhs))
    return sorted(pairs)


def _word_of(E: Membership, classes: Counter) -> tuple[int, ...]:
    word = [0] * len(E.catalogue)
    for k, m in classes.items():
        word[k] = m
    return tuple(word)


# ---------------------------------------------------------------------------
# brute-force catalogues and torsion-free classes


def brute_force_catalogue(
    algebra: PresentedAlgebra, dim_caps: tuple[int, ...], total_cap: int
) -> list[Rep]:
    """All indecomposables with bounded dimension vector, up to isomorphism."""
    classes: list[Rep] = []
    dims_list = [
        dims
        for dims in product(*(range(c + 1) for c in dim_caps))
        if 0 < sum(dims) <= total_cap
    ]
    dims_list.sort(key=sum)
    for dims in dims_list:
        for rep in all_reps(algebra, dims):
            if any(c.dims == dims and rep_iso(c, rep) for c in classes):
                continue
            classes.append(rep)
    # drop decomposables: anything isomorphic to a multiset of earlier classes
    indec: list[Rep] = []
    for rep in sorted(classes, key=lambda r: r.total_dim):
        if not _splits_over(rep, indec):
            indec.append(rep)
    return indec


def _splits_over(rep: Rep, parts: list[Rep]) -> bool:
    """Is rep isomorphic to a nonempty direct sum of the given classes?"""

    def search(start: int, remaining: tuple[int, ...], acc: list[Rep]):
        if all(d == 0 for d in remaining):
            yield list(acc)
            return
        for k in range(start, len(parts)):
            pd = parts[k].dims
            if any(pd) and all(p <= r for p, r in zip(pd, remaining)):
                acc.append(parts[k])
                yield from search(
                    k, tuple(r - p for r, p in zip(remaining, pd)), acc
                )
                acc.pop()

    for combo in search(0, rep.dims, []):
        if rep_iso(rep, direct_sum(rep.algebra, combo)):
            return True
    return False


def torsion_free_classes(E: Membership, check_len: int) -> list[frozenset[int]]:
    """Subsets of the catalogue closed under submodules and extensions.

    Both closure conditions are certified for middles of total length at
    most `check_len`; representation-finite desk-scale algebras are well
    within that range.
    """
    if not E.complete:
        raise InvalidSpec("need a complete catalogue")
    bound = dimension_bound()
    if check_len > bound:
        raise DimensionBoundExceeded(
            f"check length {check_len} exceeds the dimension bound {bound}"
        )
    cat = E.catalogue
    lengths = [c.total_dim for c in cat]
    facts = []  # (y_classes, [(u_classes, q_classes)])
    for word in _multisets_up_to(lengths, check_len):
        Y = direct_sum(E.algebra, [c for k, c in enumerate(cat) for _ in range(word[k])])
        pairs = []
        for S in enumerate_subreps(Y, bound):
            if S.total_dim in (0, Y.total_dim):
                continue
            pairs.append(
                (
                    frozenset(E.decompose(sub_rep(Y, S))),
                    frozenset(E.decompose(quotient_rep(Y, S))),
                )
            )
        facts.append((frozenset(k for k, m in enumerate(word) if m), pairs))

    out = []
    for mask in range(1 << len(cat)):
        S = frozenset(k for k in range(len(cat)) if mask >> k & 1)
        ok = True
        for y_classes, pairs in facts:
            if y_classes <= S:
                if any(not u <= S for u, _ in pairs):
                    ok = False  # a submodule escapes
                    break
            else:
                if any(u <= S and q <= S for u, q in pairs):
                    ok = False  # an extension of members escapes
                    break
        if ok:
            out.append(S)
    return out
