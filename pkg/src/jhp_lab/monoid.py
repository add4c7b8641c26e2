"""
Finitely presented, positively graded commutative monoids.

A presentation consists of graded generators, an optional carrier
restriction (the monoid lives on the sub-poset of multiplicity words the
carrier accepts), and grade-preserving relation pairs.  Because every
generator has positive grade, each graded stratum is a finite set of
words and the congruence generated by the relations can be computed
stratum by stratum with a union-find: two words are identified exactly
when a chain of single-relation rewrites w -> w - u + v connects them,
where the leftover w - u must itself be a carrier word.

Group completion, freeness, half-factoriality and bounded cancellativity
scanning are all decided from this exact stratum data; the Smith normal
form used for group completions is computed here over plain Python ints.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

WORD_CAP = 500_000


class EnumerationOverflow(RuntimeError):
    pass


class SearchBoundExceeded(RuntimeError):
    pass


class InvalidPresentation(ValueError):
    pass


Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# generators, carriers, presentations


@dataclass(frozen=True)
class GeneratorTable:
    names: tuple[str, ...]
    grades: tuple[int, ...]
    dimvecs: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if len(self.grades) != len(self.names):
            raise InvalidPresentation("one grade per generator")
        if any(g < 1 for g in self.grades):
            raise InvalidPresentation("grades must be positive")
        if self.dimvecs is not None and len(self.dimvecs) != len(self.names):
            raise InvalidPresentation("one dimension vector per generator")

    def __len__(self) -> int:
        return len(self.names)

    def grade(self, word: Word) -> int:
        return sum(m * g for m, g in zip(word, self.grades))

    def dimvec(self, word: Word) -> tuple[int, ...] | None:
        if self.dimvecs is None:
            return None
        n = len(self.dimvecs[0]) if self.dimvecs else 0
        return tuple(
            sum(m * dv[i] for m, dv in zip(word, self.dimvecs)) for i in range(n)
        )

    def zero(self) -> Word:
        return (0,) * len(self.names)

    def format_word(self, word: Word) -> str:
        if not any(word):
            return "0"
        bits = []
        for name, m in zip(self.names, word):
            if m == 1:
                bits.append(name)
            elif m > 1:
                bits.append(f"{m}*{name}")
        return "+".join(bits)


class Carrier:
    """Which multiplicity words actually occur in the monoid.

    Either everything, or the words whose dimension vector lies in a given
    finitely generated submonoid of N^n.
    """

    def __init__(self, kind: str, vectors: tuple[tuple[int, ...], ...] = ()):
        if kind not in ("all", "dimvec"):
            raise InvalidPresentation(f"unknown carrier kind {kind!r}")
        self.kind = kind
        self.vectors = tuple(tuple(v) for v in vectors)

    @classmethod
    def all_words(cls) -> "Carrier":
        return cls("all")

    @classmethod
    def dimvec_submonoid(cls, vectors) -> "Carrier":
        vectors = tuple(tuple(v) for v in vectors)
        if not vectors or any(all(x == 0 for x in v) for v in vectors):
            raise InvalidPresentation("need nonzero generating vectors")
        return cls("dimvec", vectors)

    def contains(self, gens: GeneratorTable, word: Word) -> bool:
        if self.kind == "all":
            return True
        dv = gens.dimvec(word)
        if dv is None:
            raise InvalidPresentation("dimvec carrier needs generator dimvecs")
        return self._in_submonoid(dv)

    def _in_submonoid(self, target: tuple[int, ...]) -> bool:
        if all(x == 0 for x in target):
            return True
        for v in self.vectors:
            if all(a <= b for a, b in zip(v, target)):
                rest = tuple(b - a for a, b in zip(v, target))
                if self._in_submonoid(rest):
                    return True
        return False

    def __str__(self) -> str:
        if self.kind == "all":
            return "all"
        return "dimvec-submonoid: " + " ".join(
            "(" + ",".join(str(x) for x in v) + ")" for v in self.vectors
        )


class Presentation:
    """Generators, carrier and grade-preserving relation pairs."""

    def __init__(
        self,
        gens: GeneratorTable,
        carrier: Carrier,
        relations: tuple[tuple[Word, Word], ...],
        relation_grade_bound: int | None = None,
    ):
        self.gens = gens
        self.carrier = carrier
        self.relations = tuple(
            (tuple(u), tuple(v)) for u, v in relations if tuple(u) != tuple(v)
        )
        for u, v in self.relations:
            if gens.grade(u) != gens.grade(v):
                raise InvalidPresentation(
                    f"relation {gens.format_word(u)} = {gens.format_word(v)} "
                    "does not preserve the grading"
                )
            if not (carrier.contains(gens, u) and carrier.contains(gens, v)):
                raise InvalidPresentation("relation words must lie in the carrier")
        # grade up to which the relation list is complete (caller's contract)
        self.relation_grade_bound = relation_grade_bound
        self._strata: dict[int, StratumPartition] = {}
        self._words: dict[int, tuple[Word, ...]] = {}

    # -- word enumeration

    def words_of_grade(self, s: int) -> tuple[Word, ...]:
        if s not in self._words:
            grades = self.gens.grades
            n = len(grades)
            acc = [0] * n
            out: list[Word] = []

            def walk(k: int, budget: int) -> None:
                if len(out) > WORD_CAP:
                    raise EnumerationOverflow(f"too many words at grade {s}")
                if k == n:
                    if budget == 0:
                        w = tuple(acc)
                        if self.carrier.contains(self.gens, w):
                            out.append(w)
                    return
                for m in range(budget // grades[k] + 1):
                    acc[k] = m
                    walk(k + 1, budget - m * grades[k])
                acc[k] = 0

            walk(0, s)
            self._words[s] = tuple(sorted(out))
        return self._words[s]

    def format_word(self, word: Word) -> str:
        return self.gens.format_word(word)


@dataclass(frozen=True)
class StratumPartition:
    grade: int
    classes: tuple[frozenset[Word], ...]
    index: dict

    def class_of(self, word: Word) -> frozenset[Word]:
        return self.classes[self.index[word]]

    def representative(self, word: Word) -> Word:
        return min(self.class_of(word))


def stratum_classes(P: Presentation, s: int) -> StratumPartition:
    """Congruence classes of the carrier words of grade s.

    Words w and w' are merged when w - u is a carrier word and
    w' = w - u + v for a relation (u, v) in either orientation; the
    partition is exact provided the relation list is complete up to
    grade s.
    """
    if s in P._strata:
        return P._strata[s]
    words = P.words_of_grade(s)
    idx = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    directed = []
    for u, v in P.relations:
        directed.append((u, v))
        directed.append((v, u))
    for w in words:
        for u, v in directed:
            if all(a >= b for a, b in zip(w, u)):
                r = tuple(a - b for a, b in zip(w, u))
                if not P.carrier.contains(P.gens, r):
                    continue
                w2 = tuple(a + b for a, b in zip(r, v))
                union(idx[w], idx[w2])

    groups: dict[int, list[Word]] = {}
    for k, w in enumerate(words):
        groups.setdefault(find(k), []).append(w)
    classes = tuple(
        frozenset(g) for g in sorted(groups.values(), key=lambda g: min(g))
    )
    index = {}
    for k, cls in enumerate(classes):
        for w in cls:
            index[w] = k
    part = StratumPartition(s, classes, index)
    P._strata[s] = part
    return part


def class_representative(P: Presentation, word: Word) -> Word:
    return stratum_classes(P, P.gens.grade(word)).representative(word)


# ---------------------------------------------------------------------------
# carrier generators and atoms


def generating_words(P: Presentation) -> tuple[Word, ...]:
    """Monoid generators of the carrier: its irreducible words.

    For the unrestricted carrier these are the single-generator words; for
    a dimension-vector carrier the irreducible words are harvested among
    the grades of the generating vectors.
    """
    if P.carrier.kind == "all":
        out = []
        for k in range(len(P.gens)):
            w = list(P.gens.zero())
            w[k] = 1
            out.append(tuple(w))
        return tuple(out)
    if P.gens.dimvecs is None:
        raise InvalidPresentation("dimvec carrier needs generator dimvecs")
    for g, dv in zip(P.gens.grades, P.gens.dimvecs):
        if g != sum(dv):
            raise InvalidPresentation(
                "dimvec carriers assume grade == total dimension per generator"
            )
    top = max(sum(v) for v in P.carrier.vectors)
    out = []
    for s in range(1, top + 1):
        for w in P.words_of_grade(s):
            if is_irreducible(P, w):
                out.append(w)
    return tuple(sorted(out))


def is_irreducible(P: Presentation, word: Word) -> bool:
    """No splitting of `word` into two nonzero carrier words."""
    if not any(word):
        return False
    for part in product(*(range(m + 1) for m in word)):
        if not any(part) or part == word:
            continue
        rest = tuple(a - b for a, b in zip(word, part))
        if P.carrier.contains(P.gens, part) and P.carrier.contains(P.gens, rest):
            return False
    return True


@dataclass(frozen=True)
class Atom:
    representative: Word
    grade: int
    members: frozenset[Word]

    def pretty(self, P: Presentation) -> str:
        return P.format_word(self.representative)


def atoms(P: Presentation) -> list[Atom]:
    """The atom classes of the presented monoid.

    Atoms can only be classes of irreducible carrier words, and such a
    class is an atom exactly when every word in it is irreducible.  This
    is exact once the relations are complete up to the largest irreducible
    grade.
    """
    seen = set()
    out = []
    for w in generating_words(P):
        s = P.gens.grade(w)
        part = stratum_classes(P, s)
        cls = part.class_of(w)
        rep = min(cls)
        if (s, rep) in seen:
            continue
        seen.add((s, rep))
        if all(is_irreducible(P, x) for x in cls):
            out.append(Atom(rep, s, cls))
    out.sort(key=lambda a: (a.grade, a.representative))
    return out


# ---------------------------------------------------------------------------
# integer linear algebra (Smith normal form over Z)


def smith_normal_form(A: list[list[int]]):
    """(D, U, V) with D = U A V diagonal, d_i | d_{i+1}, U and V unimodular."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [row[:] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        D[i] = [a - q * b for a, b in zip(D[i], D[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in D:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        clean = False
        while not clean:
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    row_op(i, t, D[i][t] // D[t][t])
                    if D[i][t]:
                        swap_rows(t, i)
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_op(j, t, D[t][j] // D[t][t])
                    if D[t][j]:
                        swap_cols(t, j)
                        clean = False
            if clean:
                # enforce divisibility of the remaining block
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if D[i][j] % D[t][t]:
                            row_op(t, i, -1)
                            clean = False
                            break
                    if not clean:
                        break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


def _mat_vec(rows: list[list[int]], x: list[int]) -> list[int]:
    # x (len = #rows) times the matrix: returns x . rows
    n = len(rows[0]) if rows else 0
    out = [0] * n
    for coef, row in zip(x, rows):
        if coef:
            for j, a in enumerate(row):
                out[j] += coef * a
    return out


def integer_solve(rows: list[list[int]], b: list[int]) -> list[int] | None:
    """Solve x . rows = b over the integers, or return None."""
    m = len(rows)
    if m == 0:
        return [] if not any(b) else None
    D, U, V = smith_normal_form(rows)
    n = len(b)
    bV = [sum(b[i] * V[i][j] for i in range(n)) for j in range(n)]
    y = [0] * m
    for j in range(n):
        d = D[j][j] if j < m else 0
        if d:
            if bV[j] % d:
                return None
            y[j] = bV[j] // d
        elif bV[j]:
            return None
    return _mat_vec(U, y)


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of {x : x . rows = 0}."""
    m = len(rows)
    if m == 0:
        return []
    D, U, V = smith_normal_form(rows)
    n = len(rows[0])
    out = []
    for j in range(m):
        d = D[j][j] if j < min(m, n) else 0
        if d == 0:
            out.append(U[j][:])
    return out


# ---------------------------------------------------------------------------
# group completion


@dataclass(frozen=True)
class GroupCompletionData:
    rank: int
    invariant_factors: tuple[int, ...]
    atom_images: tuple[tuple[int, ...], ...]
    _p: int
    _gen_rows: tuple[tuple[int, ...], ...]
    _V: tuple[tuple[int, ...], ...]
    _diag: tuple[int, ...]

    def image_of(self, word: Word) -> tuple[int, ...]:
        """Canonical coordinates of a carrier word in the completed group."""
        x = integer_solve([list(r) for r in self._gen_rows], list(word))
        if x is None:
            raise InvalidPresentation("word does not lie in the carrier lattice")
        p = self._p
        c = [sum(x[i] * self._V[i][j] for i in range(p)) for j in range(p)]
        out = []
        for j in range(p):
            d = self._diag[j]
            if d == 0:
                out.append(c[j])
            elif d > 1:
                out.append(c[j] % d)
            # d == 1: coordinate dies
        return tuple(out)


def group_completion(P: Presentation) -> GroupCompletionData:
    """Smith-normal-form data of the completed group of the presentation.

    The group is the lattice spanned by the carrier generators modulo the
    differences u - v of all relations (syzygies between carrier
    generators are divided out as well, so the answer does not depend on
    the chosen generator preimages).
    """
    gens_words = generating_words(P)
    p = len(gens_words)
    ng = len(P.gens)
    G = [list(w) for w in gens_words]
    rel_rows = []
    for u, v in P.relations:
        diff = [a - b for a, b in zip(u, v)]
        x = integer_solve(G, diff) if p else None
        if x is None:
            if any(diff):
                raise InvalidPresentation(
                    "relation difference escapes the carrier lattice"
                )
            x = [0] * p
        rel_rows.append(x)
    rel_rows.extend(integer_kernel(G))
    if not rel_rows:
        rel_rows = [[0] * p]
    D, U, V = smith_normal_form(rel_rows)
    diag = []
    for j in range(p):
        d = D[j][j] if j < len(rel_rows) and j < p else 0
        diag.append(abs(d))
    data = GroupCompletionData(
        rank=sum(1 for d in diag if d == 0),
        invariant_factors=tuple(d for d in diag if d > 1),
        atom_images=(),
        _p=p,
        _gen_rows=tuple(tuple(r) for r in G),
        _V=tuple(tuple(row) for row in V),
        _diag=tuple(diag),
    )
    images = tuple(data.image_of(a.representative) for a in atoms(P))
    return GroupCompletionData(
        data.rank,
        data.invariant_factors,
        images,
        data._p,
        data._gen_rows,
        data._V,
        data._diag,
    )


# ---------------------------------------------------------------------------
# freeness and half-factoriality


@dataclass(frozen=True)
class FreeVerdict:
    free: bool
    witness: str
    atom_count: int
    rank: int
    torsion: tuple[int, ...]


def is_free(P: Presentation) -> FreeVerdict:
    """Freeness test: free atomic graded monoids are exactly those whose
    completed group is torsion-free with the atoms as a basis."""
    ats = atoms(P)
    gc = group_completion(P)
    if gc.invariant_factors:
        return FreeVerdict(
            False,
            f"completed group has torsion {list(gc.invariant_factors)}",
            len(ats),
            gc.rank,
            gc.invariant_factors,
        )
    if len(set(gc.atom_images)) != len(ats):
        return FreeVerdict(
            False, "distinct atoms collide in the completed group",
            len(ats), gc.rank, gc.invariant_factors,
        )
    if len(ats) != gc.rank:
        return FreeVerdict(
            False,
            f"{len(ats)} atoms against completed rank {gc.rank}",
            len(ats),
            gc.rank,
            gc.invariant_factors,
        )
    basis = ", ".join(a.pretty(P) for a in ats)
    return FreeVerdict(True, f"free on {{{basis}}}", len(ats), gc.rank, ())


@dataclass(frozen=True)
class HalfFactorialVerdict:
    status: str  # "yes" | "no" | "inconclusive"
    assignment: dict | None = None


def _rational_solve(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Particular solution and nullspace basis of rows . x = rhs, or None."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    M = [row[:] + [rhs[k]] for k, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n]:
            return None
    part = [Fraction(0)] * n
    for k, c in enumerate(pivots):
        part[c] = M[k][n]
    null = []
    pivset = set(pivots)
    for c in range(n):
        if c in pivset:
            continue
        vec = [Fraction(0)] * n
        vec[c] = Fraction(1)
        for k, pc in enumerate(pivots):
            vec[pc] = -M[k][c]
        null.append(vec)
    return part, null


def is_half_factorial(
    P: Presentation, search_bound: int = 64, max_free: int = 3
) -> HalfFactorialVerdict:
    """Feasibility of a grading that is 1 on every atom.

    The monoid is half-factorial iff some additive integer functional is 1
    on all atoms and at least 1 on every irreducible carrier word.  The
    linear part is solved exactly over the rationals; leftover freedom is
    searched over small integer values, and an unfinished search is
    reported as inconclusive rather than as a verdict.
    """
    ats = atoms(P)
    gen_words = generating_words(P)
    ng = len(P.gens)
    rows = [
        [Fraction(a - b) for a, b in zip(u, v)] for u, v in P.relations
    ]
    rhs = [Fraction(0)] * len(rows)
    for a in ats:
        rows.append([Fraction(x) for x in a.representative])
        rhs.append(Fraction(1))
    solved = _rational_solve(rows, rhs) if rows else ([Fraction(0)] * ng, [
        [Fraction(int(i == j)) for j in range(ng)] for i in range(ng)
    ])
    if solved is None:
        return HalfFactorialVerdict("no")
    part, null = solved
    # values on the carrier generators, affine in the free parameters
    val0 = [sum(Fraction(m) * part[k] for k, m in enumerate(w)) for w in gen_words]
    valdir = [
        [sum(Fraction(m) * vec[k] for k, m in enumerate(w)) for w in gen_words]
        for vec in null
    ]
    live = [t for t, col in enumerate(valdir) if any(col)]
    if not live:
        ok = all(v.denominator == 1 and v >= 1 for v in val0)
        if ok:
            assignment = {
                P.format_word(w): int(v) for w, v in zip(gen_words, val0)
            }
            return HalfFactorialVerdict("yes", assignment)
        return HalfFactorialVerdict("no")
    if len(live) > max_free:
        return HalfFactorialVerdict("inconclusive")
    span = range(-search_bound, search_bound + 1)
    for choice in product(span, repeat=len(live)):
        vals = list(val0)
        for c, t in zip(choice, live):
            if c:
                vals = [v + c * d for v, d in zip(vals, valdir[t])]
        if all(v.denominator == 1 and 1 <= v <= search_bound * 4 for v in vals):
            assignment = {
                P.format_word(w): int(v) for w, v in zip(gen_words, vals)
            }
            return HalfFactorialVerdict("yes", assignment)
    return HalfFactorialVerdict("inconclusive")


# ---------------------------------------------------------------------------
# cancellativity scanning and Cayley quivers


@dataclass(frozen=True)
class CancellativityScan:
    bound: int
    certificate: tuple[Word, Word, Word] | None  # (a, x, y)

    def cancellative_up_to_bound(self) -> bool:
        return self.certificate is None


def cancellativity_scan(P: Presentation, bound: int) -> CancellativityScan:
    """Search strata up to `bound` for a + x = a + y with x != y."""
    grades = [s for s in range(1, bound + 1) if P.words_of_grade(s)]
    for g in grades:
        part = stratum_classes(P, g)
        if len(part.classes) < 2:
            continue
        reps = [min(c) for c in part.classes]
        for xi in range(len(reps)):
            for yi in range(xi + 1, len(reps)):
                x, y = reps[xi], reps[yi]
                for h in grades:
                    if g + h > bound:
                        continue
                    target = stratum_classes(P, g + h)
                    for a_cls in stratum_classes(P, h).classes:
                        a = min(a_cls)
                        ax = tuple(p + q for p, q in zip(a, x))
                        ay = tuple(p + q for p, q in zip(a, y))
                        if target.index[ax] == target.index[ay]:
                            return CancellativityScan(bound, (a, x, y))
    return CancellativityScan(bound, None)


def cayley_quiver(P: Presentation, bound: int) -> str:
    """DOT text of the Cayley quiver truncated at grade `bound`.

    Vertices are congruence classes of grade at most `bound`, named by
    their lexicographically least word; one labelled arrow per atom leaves
    every vertex whose grade leaves room below the bound.
    """
    ats = atoms(P)
    verts: list[tuple[int, Word]] = []
    for s in range(bound + 1):
        if s and not P.words_of_grade(s):
            continue
        part = stratum_classes(P, s)
        verts.extend((s, min(c)) for c in part.classes)
    verts.sort()
    lines = ["digraph cayley {", "  rankdir=LR;"]
    for s, rep in verts:
        lines.append(f'  "{P.format_word(rep)}" [grade={s}];')
    for s, rep in verts:
        for a in ats:
            if s + a.grade > bound:
                continue
            target = tuple(p + q for p, q in zip(rep, a.representative))
            tgt = stratum_classes(P, s + a.grade).representative(target)
            lines.append(
                f'  "{P.format_word(rep)}" -> "{P.format_word(tgt)}"'
                f' [label="{a.pretty(P)}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# presentation files


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation format::

        generator P1 grade 2 dimvec (2,0)
        generator M grade 3 dimvec (2,1)
        carrier all
        relation P1 + I1 = M + M
    """
    names: list[str] = []
    grades: list[int] = []
    dimvecs: list[tuple[int, ...]] = []
    carrier = Carrier.all_words()
    rel_texts: list[tuple[str, str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generator"):
            m = re.fullmatch(
                r"generator\s+(\S+)\s+grade\s+(\d+)(?:\s+dimvec\s+\(([\d,\s]*)\))?",
                line,
            )
            if not m:
                raise InvalidPresentation(f"bad generator line: {raw!r}")
            names.append(m.group(1))
            grades.append(int(m.group(2)))
            if m.group(3) is not None:
                dimvecs.append(tuple(int(x) for x in m.group(3).split(",")))
        elif line.startswith("carrier"):
            rest = line[len("carrier"):].strip()
            if rest == "all":
                carrier = Carrier.all_words()
            elif rest.startswith("dimvec-submonoid:"):
                vecs = re.findall(r"\(([\d,\s]+)\)", rest)
                carrier = Carrier.dimvec_submonoid(
                    tuple(tuple(int(x) for x in v.split(",")) for v in vecs)
                )
            else:
                raise InvalidPresentation(f"bad carrier line: {raw!r}")
        elif line.startswith("relation"):
            body = line[len("relation"):].strip()
            if body.count("=") != 1:
                raise InvalidPresentation(f"bad relation line: {raw!r}")
            lhs, rhs = body.split("=")
            rel_texts.append((lhs, rhs))
        else:
            raise InvalidPresentation(f"unrecognized line: {raw!r}")
    gens = GeneratorTable(
        tuple(names),
        tuple(grades),
        tuple(dimvecs) if dimvecs and len(dimvecs) == len(names) else None,
    )
    index = {n: k for k, n in enumerate(names)}

    def parse_side(side: str) -> Word:
        word = [0] * len(names)
        for term in side.split("+"):
            term = term.strip()
            if not term:
                raise InvalidPresentation(f"empty term in {side!r}")
            m = re.fullmatch(r"(?:(\d+)\s*\*\s*)?(\S+)", term)
            if not m or m.group(2) not in index:
                raise InvalidPresentation(f"bad term {term!r}")
            word[index[m.group(2)]] += int(m.group(1) or 1)
        return tuple(word)

    relations = tuple((parse_side(l), parse_side(r)) for l, r in rel_texts)
    return Presentation(gens, carrier, relations)
