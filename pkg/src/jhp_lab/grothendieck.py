"""
From categories to monoid presentations and decision reports.

A category source names an exact category (a type-A torsion-free class, a
dimension-vector-restricted module class over the A2 algebra, a split
semisimple class, a torsion-free class over a Nakayama algebra, an
explicit presentation, or any repkit membership).  `presentation_of`
turns it into a graded monoid presentation whose relations come from
conflations with bounded middle length, and `report` assembles the full
verdict sheet: simple objects/atoms, completed-group rank and torsion,
freeness (= the Jordan-Hoelder property), half-factoriality (= unique
composition-series length), a bounded cancellativity scan, and the
dimension-vector monoid.

Relation lists are truncated at the source's grade bound.  Atom detection
only needs relations up to the largest generator grade (rewrites preserve
the grading), and whenever the harvested relation lattice is saturated
with the same rank as the kernel of the dimension-vector map, the
completed-group data is certified complete; both facts are recorded as
caveats on every report.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import gf2, monoid, nakayama, repkit, typea
from .monoid import Carrier, GeneratorTable, Presentation
from .symgroup import Orientation, Perm, format_perm

A2_GEN_NAMES = ("S1", "S2", "P")
A2_GEN_GRADES = (1, 1, 2)
A2_GEN_DIMVECS = ((1, 0), (0, 1), (1, 1))


class InvalidSpec(ValueError):
    pass


@dataclass(eq=False)
class CategorySource:
    """A recipe for one exact category plus a relation-harvest bound."""

    kind: str
    label: str
    grade_bound: int | None
    object_word: str  # "simple objects" or "atoms" in reports
    # payload, by kind
    w: Perm | None = None
    quiver: Orientation | None = None
    m: int = 0
    n: int = 0
    vectors: tuple = ()
    kupisch: nakayama.KupischSeries | None = None
    members: frozenset | None = None
    presentation_text: str | None = None
    membership: repkit.Membership | None = None
    allowed: tuple[int, ...] | None = None


def typea_torsionfree(
    w: Perm, quiver: Orientation, grade_bound: int | None = None
) -> CategorySource:
    typea.class_of(w, quiver)  # validates sortability
    return CategorySource(
        kind="typea",
        label=f"typeA_torsionfree(w={format_perm(w)}, Q={quiver})",
        grade_bound=grade_bound,
        object_word="simple objects",
        w=tuple(w),
        quiver=quiver,
    )


def a2_designated(m: int, n: int, grade_bound: int | None = None) -> CategorySource:
    if (m, n) == (0, 0) or m < 0 or n < 0:
        raise InvalidSpec("need a nonzero nonnegative dimension vector")
    return CategorySource(
        kind="a2",
        label=f"a2_designated({m},{n})",
        grade_bound=grade_bound if grade_bound is not None else 4 * (m + n),
        object_word="simple objects",
        m=m,
        n=n,
    )


def em_semisimple(vectors, grade_bound: int | None = None) -> CategorySource:
    vectors = tuple(tuple(v) for v in vectors)
    top = max(sum(v) for v in vectors)
    return CategorySource(
        kind="em",
        label=f"em_semisimple{vectors}",
        grade_bound=grade_bound if grade_bound is not None else 2 * top,
        object_word="simple objects",
        vectors=vectors,
    )


def nakayama_tf(
    kup: nakayama.KupischSeries,
    members: frozenset[nakayama.Uniserial],
    grade_bound: int | None = None,
) -> CategorySource:
    ok, violations = nakayama.validate(kup, members)
    if not ok:
        raise InvalidSpec(f"not submodule-closed: {violations}")
    return CategorySource(
        kind="nakayama",
        label=f"nakayama_tf(kupisch={list(kup.lengths)}, cyclic={kup.cyclic})",
        grade_bound=grade_bound,
        object_word="simple objects",
        kupisch=kup,
        members=frozenset(members),
    )


def abstract_source(
    presentation_text: str, label: str = "abstract", grade_bound: int | None = None
) -> CategorySource:
    pres = monoid.parse_presentation(presentation_text)
    top = max(pres.gens.grades, default=1)
    return CategorySource(
        kind="abstract",
        label=label,
        grade_bound=grade_bound if grade_bound is not None else 2 * top,
        object_word="atoms",
        presentation_text=presentation_text,
    )


def repkit_backed(
    membership: repkit.Membership,
    grade_bound: int | None = None,
    allowed: tuple[int, ...] | None = None,
) -> CategorySource:
    live = (
        sorted(membership.allowed)
        if membership.allowed is not None
        else list(range(len(membership.catalogue)))
    )
    return CategorySource(
        kind="repkit",
        label=f"repkit_backed({membership.name})",
        grade_bound=grade_bound,
        object_word="simple objects",
        membership=membership,
        allowed=tuple(live) if allowed is None else allowed,
    )


# ---------------------------------------------------------------------------
# presentations


def _harvested_presentation(
    membership: repkit.Membership, live: list[int], grade_bound: int | None
) -> Presentation:
    """Present the subcategory; harvest up to grade_bound, or adaptively.

    With an explicit bound, all conflations with middle length up to that
    bound are harvested.  Without one, the bound is raised from the
    largest generator grade (enough for exact atoms) until the harvested
    relation lattice is certified complete by dimension-vector saturation,
    capped at twice the largest generator grade.
    """
    names = tuple(membership.labels[k] for k in live)
    grades = tuple(membership.catalogue[k].total_dim for k in live)
    dimvecs = tuple(membership.catalogue[k].dims for k in live)
    gens = GeneratorTable(names, grades, dimvecs)
    pos = {k: i for i, k in enumerate(live)}

    def build(bound: int) -> Presentation:
        relations = []
        for lhs, rhs in repkit.conflations_up_to(membership, bound):
            u = [0] * len(live)
            v = [0] * len(live)
            for k, mult in enumerate(lhs):
                if mult:
                    u[pos[k]] = mult
            for k, mult in enumerate(rhs):
                if mult:
                    v[pos[k]] = mult
            relations.append((tuple(u), tuple(v)))
        return Presentation(
            gens, Carrier.all_words(), tuple(relations), relation_grade_bound=bound
        )

    if grade_bound is not None:
        return build(grade_bound)
    top = max(grades, default=1)
    pres = build(top)
    for bound in range(top, 2 * top + 1):
        if bound > top:
            pres = build(bound)
        if relation_lattice_certified(pres):
            break
    return pres


def relation_lattice_certified(pres: Presentation) -> bool:
    """Is the harvested relation lattice provably all of the kernel of the
    dimension-vector map?  True when it is saturated of full kernel rank;
    no conflation can then add anything, since every conflation relation
    has dimension-vector difference zero."""
    if pres.carrier.kind != "all" or pres.gens.dimvecs is None:
        return False
    gc = monoid.group_completion(pres)
    ngen = len(pres.gens)
    ker_rank = ngen - _integer_rank([list(dv) for dv in pres.gens.dimvecs])
    return not gc.invariant_factors and (ngen - gc.rank) == ker_rank


def a2_conflation_rule(x: tuple, y: tuple, z: tuple) -> bool:
    """Can y be the middle of a conflation with sub x and quotient z?

    Words are (S1, S2, P) multiplicity triples over the A2 path algebra
    with projective cover P of S2.  Middles arise from gluing t pairs of
    an S1 from the sub and an S2 from the quotient into t copies of P.
    """
    bx, cx, ax = x
    by, cy, ay = y
    bz, cz, az = z
    t = ay - ax - az
    return (
        0 <= t <= min(bx, cz)
        and by == bx + bz - t
        and cy == cx + cz - t
    )


def _a2_presentation(m: int, n: int, grade_bound: int) -> Presentation:
    gens = GeneratorTable(A2_GEN_NAMES, A2_GEN_GRADES, A2_GEN_DIMVECS)
    carrier = Carrier.dimvec_submonoid([(m, n)])
    pres0 = Presentation(gens, carrier, ())
    words = []
    for s in range(1, grade_bound + 1):
        words.extend(pres0.words_of_grade(s))
    relations = set()
    for x in words:
        for z in words:
            gx, gz = gens.grade(x), gens.grade(z)
            if gx + gz > grade_bound:
                continue
            top = min(x[0], z[1])  # S1 from the sub, S2 from the quotient
            for t in range(1, top + 1):
                y = (x[0] + z[0] - t, x[1] + z[1] - t, x[2] + z[2] + t)
                split = tuple(a + b for a, b in zip(x, z))
                relations.add((y, split))
    return Presentation(
        gens, carrier, tuple(sorted(relations)), relation_grade_bound=grade_bound
    )


def presentation_of(src: CategorySource) -> Presentation:
    """The graded monoid presentation of a category source.

    Generators are the indecomposables (or the designated carrier words);
    relations are middle-versus-ends pairs of all conflations with middle
    length at most the source's grade bound.
    """
    if src.kind == "typea":
        membership = typea.torsion_free_membership(src.w, src.quiver)
        live = sorted(membership.allowed)
        return _harvested_presentation(membership, live, src.grade_bound)
    if src.kind == "nakayama":
        membership = nakayama.class_membership(src.kupisch, src.members)
        live = sorted(membership.allowed)
        return _harvested_presentation(membership, live, src.grade_bound)
    if src.kind == "repkit":
        return _harvested_presentation(
            src.membership, list(src.allowed), src.grade_bound
        )
    if src.kind == "a2":
        return _a2_presentation(src.m, src.n, src.grade_bound)
    if src.kind == "em":
        n = len(src.vectors[0])
        gens = GeneratorTable(
            tuple(f"S{i}" for i in range(1, n + 1)),
            (1,) * n,
            tuple(tuple(int(i == j) for j in range(n)) for i in range(n)),
        )
        return Presentation(
            gens,
            Carrier.dimvec_submonoid(src.vectors),
            (),
            relation_grade_bound=src.grade_bound,
        )
    if src.kind == "abstract":
        pres = monoid.parse_presentation(src.presentation_text)
        pres.relation_grade_bound = src.grade_bound
        return pres
    raise InvalidSpec(f"unknown source kind {src.kind!r}")


# ---------------------------------------------------------------------------
# reports


@dataclass
class MonoidReport:
    source: str
    object_word: str
    generators: list[dict]
    atoms: list[str]
    k0_rank: int
    k0_torsion: list[int]
    jhp: bool
    unique_length: bool | None  # None = inconclusive
    cancellative_status: str  # "certificate" or "none_up_to_bound"
    cancellative_bound: int
    certificate: tuple[str, str, str] | None
    dim_monoid: list[tuple[int, ...]]
    caveats: list[str]
    presentation: Presentation = field(repr=False, default=None)
    free_witness: str = ""

    def to_json_dict(self) -> dict:
        cancellative: dict = {
            "status": self.cancellative_status,
            "bound": self.cancellative_bound,
        }
        if self.certificate is not None:
            a, x, y = self.certificate
            cancellative["certificate"] = {"a": a, "x": x, "y": y}
        return {
            "source": self.source,
            "generators": self.generators,
            "atoms": self.atoms,
            "k0": {"rank": self.k0_rank, "torsion": self.k0_torsion},
            "jhp": self.jhp,
            "unique_length": (
                "inconclusive" if self.unique_length is None else self.unique_length
            ),
            "cancellative": cancellative,
            "dim_monoid": [list(v) for v in self.dim_monoid],
            "caveats": self.caveats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def _integer_rank(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    D, _, _ = monoid.smith_normal_form(rows)
    return sum(1 for k in range(min(len(D), len(D[0]))) if D[k][k])


def _saturation_caveat(pres: Presentation, gc) -> str:
    """Certify completeness of the harvested relation lattice when possible.

    Every conflation relation has dimension-vector difference zero.  When
    the harvested relations already span a saturated lattice of the same
    rank as that kernel, no further conflation can change the completed
    group.
    """
    if pres.carrier.kind != "all" or pres.gens.dimvecs is None:
        return "completed-group data computed from the listed relations only"
    ngen = len(pres.gens)
    dim_rows = [list(dv) for dv in pres.gens.dimvecs]
    ker_rank = ngen - _integer_rank(dim_rows)
    rel_rank = ngen - gc.rank
    if not gc.invariant_factors and rel_rank == ker_rank:
        return (
            "relation lattice certified complete"
            " (saturated with full dimension-vector kernel rank)"
        )
    return (
        f"relations truncated at middle length {pres.relation_grade_bound};"
        " completed-group data may be coarser than the true values"
    )


def report(src: CategorySource) -> MonoidReport:
    pres = presentation_of(src)
    bound = pres.relation_grade_bound
    ats = monoid.atoms(pres)
    gc = monoid.group_completion(pres)
    fv = monoid.is_free(pres)
    hf = monoid.is_half_factorial(pres)
    scan = monoid.cancellativity_scan(pres, bound)

    caveats = [
        "all module-level computations are over the two-element field",
        _harvest_caveat(src, bound),
        _saturation_caveat(pres, gc),
        f"cancellativity scanned up to grade {bound}",
    ]
    certificate = None
    if scan.certificate is not None:
        a, x, y = scan.certificate
        certificate = (
            pres.format_word(a),
            pres.format_word(x),
            pres.format_word(y),
        )
    unique_length = {"yes": True, "no": False, "inconclusive": None}[hf.status]
    gens_json = [
        {
            "name": pres.gens.names[k],
            "grade": pres.gens.grades[k],
            "dimvec": list(pres.gens.dimvecs[k]) if pres.gens.dimvecs else None,
        }
        for k in range(len(pres.gens))
    ]
    return MonoidReport(
        source=src.label,
        object_word=src.object_word,
        generators=gens_json,
        atoms=[a.pretty(pres) for a in ats],
        k0_rank=gc.rank,
        k0_torsion=list(gc.invariant_factors),
        jhp=fv.free,
        unique_length=unique_length,
        cancellative_status=(
            "certificate" if scan.certificate is not None else "none_up_to_bound"
        ),
        cancellative_bound=bound,
        certificate=certificate,
        dim_monoid=dimension_monoid(src, pres),
        caveats=caveats,
        presentation=pres,
        free_witness=fv.witness,
    )


def _harvest_caveat(src: CategorySource, bound: int) -> str:
    if src.kind in ("typea", "nakayama", "repkit"):
        return (
            "relations harvested exhaustively from conflations with middle"
            f" length <= {bound}"
        )
    if src.kind == "a2":
        return (
            "relations from the closed-form middle-term rule up to grade"
            f" {bound}"
        )
    if src.kind == "em":
        return "split exact: no nontrivial relations"
    return "presented monoid: relations taken verbatim from the input"


def dimension_monoid(
    src: CategorySource, pres: Presentation | None = None
) -> list[tuple[int, ...]]:
    """Dimension vectors of the monoid generators: a generating set of the
    image of the monoid in the integer lattice (the carrier's own
    generating words when the carrier is restricted)."""
    if pres is None:
        pres = presentation_of(src)
    if pres.gens.dimvecs is None:
        return []
    out = {pres.gens.dimvec(w) for w in monoid.generating_words(pres)}
    return sorted(out)


# ---------------------------------------------------------------------------
# the Kronecker demonstration


def kronecker_algebra() -> repkit.PresentedAlgebra:
    return repkit.PresentedAlgebra(2, (("f", 2, 1), ("g", 2, 1)), ())


def _no_split_socle(rep: repkit.Rep) -> bool:
    # no common kernel vector of the two arrow maps
    d2 = rep.dims[1]
    system = []
    for r in range(rep.dims[0]):
        for cols in rep.maps:
            row = 0
            for c in range(d2):
                if cols[c] >> r & 1:
                    row |= 1 << c
            system.append(row)
    return gf2.nullity(system, d2) == 0


@dataclass
class KroneckerDemo:
    bound: int
    regular_labels: list[str]
    regular_classes_distinct: bool
    projective_relations: list[tuple[str, str]]
    certificate: tuple[str, str, str] | None
    s1_is_atom: bool
    p2_is_simple: bool
    presentation: Presentation = field(repr=False, default=None)
    caveats: list[str] = field(default_factory=list)


def kronecker_demo(bound: int = 3) -> KroneckerDemo:
    """Bounded study of Kronecker representations with no simple-socle split.

    Harvests all indecomposables of total dimension at most `bound` that
    contain no direct summand concentrated at the source vertex, presents
    the resulting monoid, and exhibits the three distinct one-parameter
    classes over the two-element field that all complete the same
    projective, breaking cancellativity.
    """
    if bound < 3:
        raise InvalidSpec("need bound >= 3 to reach the projective cover")
    algebra = kronecker_algebra()
    indecs = repkit.brute_force_catalogue(algebra, (bound, bound), bound)
    members = [r for r in indecs if _no_split_socle(r)]
    members.sort(key=lambda r: (r.total_dim, r.dims, r.maps))

    def label(rep: repkit.Rep) -> str:
        if rep.dims == (1, 0):
            return "S1"
        if rep.dims == (1, 1):
            return f"R{rep.maps[0][0]}{rep.maps[1][0]}"
        if rep.dims == (2, 1):
            return "P2"
        if rep.dims == (1, 2):
            return "I1"
        return f"N{rep.dims[0]}{rep.dims[1]}"

    raw = [label(r) for r in members]
    labels = tuple(
        nm if raw.count(nm) == 1 else f"{nm}#{raw[:k].count(nm)}"
        for k, nm in enumerate(raw)
    )
    membership = repkit.Membership.predicate(
        algebra,
        _no_split_socle,
        catalogue=tuple(members),
        labels=labels,
        complete=False,
        name="kronecker-no-source-socle",
    )

    def enum(length: int):
        lengths = [r.total_dim for r in members]
        for word in repkit._multisets_up_to(lengths, length + 1):
            if sum(m * l for m, l in zip(word, lengths)) == length:
                parts = []
                for k, m in enumerate(word):
                    parts.extend([members[k]] * m)
                yield repkit.direct_sum(algebra, parts)

    pairs = repkit.conflations_up_to(membership, bound, iso_enumerator=enum)
    gens = GeneratorTable(
        labels,
        tuple(r.total_dim for r in members),
        tuple(r.dims for r in members),
    )
    pres = Presentation(
        gens, Carrier.all_words(), tuple(pairs), relation_grade_bound=bound
    )

    regular_idx = [k for k, r in enumerate(members) if r.dims == (1, 1)]
    part2 = monoid.stratum_classes(pres, 2)
    reg_words = []
    for k in regular_idx:
        w = [0] * len(members)
        w[k] = 1
        reg_words.append(tuple(w))
    distinct = len({part2.index[w] for w in reg_words}) == len(reg_words)

    p2_idx = next(
        k for k, r in enumerate(members) if r.dims == (2, 1)
    )
    s1_idx = next(k for k, r in enumerate(members) if r.dims == (1, 0))
    part3 = monoid.stratum_classes(pres, 3)
    p2_word = tuple(int(k == p2_idx) for k in range(len(members)))
    proj_relations = []
    for k, w in zip(regular_idx, reg_words):
        sx = tuple(a + int(i == s1_idx) for i, a in enumerate(w))
        if part3.index[sx] == part3.index[p2_word]:
            proj_relations.append((f"S1+{labels[k]}", labels[p2_idx]))

    scan = monoid.cancellativity_scan(pres, bound)
    certificate = None
    if scan.certificate is not None:
        a, x, y = scan.certificate
        certificate = (
            pres.format_word(a),
            pres.format_word(x),
            pres.format_word(y),
        )

    atoms = monoid.atoms(pres)
    s1_word = tuple(int(k == s1_idx) for k in range(len(members)))
    s1_is_atom = any(a.representative == s1_word for a in atoms)
    p2_rep = members[p2_idx]
    p2_simple = repkit.is_simple_object(p2_rep, membership)

    return KroneckerDemo(
        bound=bound,
        regular_labels=[labels[k] for k in regular_idx],
        regular_classes_distinct=distinct,
        projective_relations=proj_relations,
        certificate=certificate,
        s1_is_atom=s1_is_atom,
        p2_is_simple=p2_simple,
        presentation=pres,
        caveats=[
            "generators and relations truncated at total dimension"
            f" {bound}; the full class has unboundedly many indecomposables",
            "computed over the two-element field: the projective line has"
            " exactly three points",
        ],
    )
