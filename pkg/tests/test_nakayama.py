import pytest

from jhp_lab import nakayama as nk
from jhp_lab import repkit

LINEAR = nk.parse_kupisch("kupisch: 3,2,1")
CYCLIC = nk.parse_kupisch("kupisch-cyclic: 2,2")


def full_class(kup):
    return frozenset(
        nk.Uniserial(t, l)
        for t in range(1, kup.n + 1)
        for l in range(1, kup.max_length(t) + 1)
    )


class TestKupisch:
    def test_parse_linear(self):
        assert LINEAR.lengths == (1, 2, 3) and not LINEAR.cyclic

    def test_parse_cyclic(self):
        assert CYCLIC.lengths == (2, 2) and CYCLIC.cyclic

    def test_invalid_series(self):
        with pytest.raises(ValueError):
            nk.KupischSeries((2, 2, 1))  # vertex 1 must carry a simple
        with pytest.raises(ValueError):
            nk.KupischSeries((1, 3, 3))  # grows by more than one
        with pytest.raises(ValueError):
            nk.KupischSeries((2, 1), cyclic=True)


class TestSubmoduleChain:
    def test_projective_chain(self):
        chain = nk.submodule_chain(LINEAR, nk.Uniserial(3, 3))
        assert [str(u) for u in chain] == ["1:1", "2:2"]

    def test_simple_has_no_proper_submodules(self):
        for t in (1, 2, 3):
            assert nk.submodule_chain(LINEAR, nk.Uniserial(t, 1)) == []

    def test_cyclic_wraparound(self):
        assert nk.submodule_chain(CYCLIC, nk.Uniserial(1, 2)) == [nk.Uniserial(2, 1)]
        assert nk.submodule_chain(CYCLIC, nk.Uniserial(2, 2)) == [nk.Uniserial(1, 1)]

    def test_matches_representation_subobjects(self):
        # the combinatorial chain agrees with actual subrepresentations
        for kup in (LINEAR, CYCLIC):
            alg, mods, reps = nk.catalogue(kup)
            E = repkit.Membership.full(
                tuple(reps), labels=tuple(str(u) for u in mods)
            )
            for u, rep in zip(mods, reps):
                want = {(s.top, s.length) for s in nk.submodule_chain(kup, u)}
                got = set()
                for S in repkit.enumerate_subreps(rep):
                    if S.total_dim in (0, rep.total_dim):
                        continue
                    dec = E.decompose(repkit.sub_rep(rep, S))
                    (idx, mult), = dec.items()
                    assert mult == 1  # submodules of a uniserial are uniserial
                    got.add((mods[idx].top, mods[idx].length))
                assert got == want, (kup, u)


class TestValidate:
    def test_good_class(self):
        ok, violations = nk.validate(
            LINEAR,
            frozenset({nk.Uniserial(1, 1), nk.Uniserial(2, 2), nk.Uniserial(3, 3)}),
        )
        assert ok and not violations

    def test_missing_submodule(self):
        ok, violations = nk.validate(LINEAR, frozenset({nk.Uniserial(3, 3)}))
        assert not ok and violations

    def test_empty(self):
        assert nk.validate(LINEAR, frozenset())[0]


class TestSimplesAndProjectives:
    def test_full_module_category(self):
        table = nk.simples_and_projectives(LINEAR, full_class(LINEAR))
        assert table == {
            1: (nk.Uniserial(1, 1), nk.Uniserial(1, 1)),
            2: (nk.Uniserial(2, 1), nk.Uniserial(2, 2)),
            3: (nk.Uniserial(3, 1), nk.Uniserial(3, 3)),
        }

    def test_one_member_per_top(self):
        members = frozenset(
            {nk.Uniserial(1, 1), nk.Uniserial(2, 2), nk.Uniserial(3, 3)}
        )
        table = nk.simples_and_projectives(LINEAR, members)
        for t, (s, p) in table.items():
            assert s == p

    def test_cyclic_class(self):
        members = frozenset({nk.Uniserial(2, 1), nk.Uniserial(1, 2)})
        table = nk.simples_and_projectives(CYCLIC, members)
        assert table == {
            1: (nk.Uniserial(1, 2), nk.Uniserial(1, 2)),
            2: (nk.Uniserial(2, 1), nk.Uniserial(2, 1)),
        }

    def test_rejects_invalid(self):
        with pytest.raises(nk.InvalidClass):
            nk.simples_and_projectives(LINEAR, frozenset({nk.Uniserial(3, 3)}))


class TestJhpCheck:
    def test_counts(self):
        assert nk.jhp_check(LINEAR, full_class(LINEAR)) == (3, 3, True)
        F = frozenset({nk.Uniserial(1, 1), nk.Uniserial(2, 2), nk.Uniserial(3, 3)})
        assert nk.jhp_check(LINEAR, F) == (3, 3, True)

    def test_every_enumerated_class_passes(self):
        for kup in (LINEAR, CYCLIC):
            E = nk.full_membership(kup)
            _, mods, reps = nk.catalogue(kup)
            classes = repkit.torsion_free_classes(E, check_len=4)
            assert classes  # at least the empty and full classes
            for S in classes:
                members = frozenset(mods[i] for i in S)
                n_simp, n_proj, ok = nk.jhp_check(kup, members)
                assert ok and n_simp == n_proj
                # cross-check the simple objects against the oracle
                sub_E = nk.class_membership(kup, members)
                brute = {
                    mods[i]
                    for i in S
                    if repkit.is_simple_object(reps[i], sub_E)
                }
                table = nk.simples_and_projectives(kup, members)
                assert brute == {s for s, _ in table.values()}


class TestAlgebraBridge:
    def test_linear_algebra_shape(self):
        alg = nk.algebra(LINEAR)
        assert alg.vertices == 3
        assert [(s, t) for _, s, t in alg.arrows] == [(2, 1), (3, 2)]
        assert alg.relations == ()  # the full path algebra

    def test_truncated_linear(self):
        kup = nk.KupischSeries((1, 2, 2))  # radical-square-zero at the top
        alg = nk.algebra(kup)
        assert len(alg.relations) == 1

    def test_cyclic_algebra(self):
        alg = nk.algebra(CYCLIC)
        assert alg.vertices == 2
        assert len(alg.arrows) == 2
        assert len(alg.relations) == 2  # radical square zero

    def test_uniserial_reps_are_uniserial(self):
        for kup in (LINEAR, CYCLIC):
            alg, mods, reps = nk.catalogue(kup)
            for u, rep in zip(mods, reps):
                assert rep.total_dim == u.length
                # exactly length+1 subrepresentations: a chain
                assert len(repkit.enumerate_subreps(rep)) == u.length + 1
