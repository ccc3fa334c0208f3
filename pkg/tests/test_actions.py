from __future__ import annotations

import pytest

from oracles import closure, quasiprimitive, smallest_block
from skewfact.actions import (
    IndexTooLarge,
    analyze_action,
    coset_action,
    is_2transitive,
    is_primitive,
    is_quasiprimitive,
    is_regular,
    is_transitive,
    minimal_blocks,
)
from skewfact.constructors import a5_in_psl211, make
from skewfact.factorization import find_regular_dihedral
from skewfact.group import GroupHandle, RandomSource, orbits
from skewfact.perm import parse_cycles
from skewfact.subgroups import core_small


class TestOrbits:
    def test_regular(self):
        assert is_regular(make("D:12"))

    def test_found_d8_regular(self):
        res = find_regular_dihedral(make("A:8"), RandomSource(1))
        assert is_regular(res.witness.group)

    def test_partial(self):
        H = GroupHandle([parse_cycles("(1 2 3)")], 5)
        assert orbits(H) == [[0, 1, 2], [3], [4]]
        assert not is_transitive(H)


class TestCosetAction:
    def test_pgl211_on_a5(self):
        ca = coset_action(make("PGL2:11"), a5_in_psl211())
        assert ca.degree == 22 and ca.faithful

    def test_m12_on_m11(self):
        X = make("M12")
        ca = coset_action(X, make("M11"))
        assert ca.degree == 12 and is_2transitive(ca.image)

    def test_whole_group(self):
        X = make("S:4")
        ca = coset_action(X, X)
        assert ca.degree == 1 and ca.kernel.order() == 24

    def test_degree_times_order(self):
        X = make("A:6")
        H = X.stabilizer(0, 1)
        assert coset_action(X, H).degree * H.order() == X.order()

    @pytest.mark.parametrize("spec,sub", [("S:4", "klein"), ("PGL2:7", "stab"), ("S:5", "stab2"), ("AGL32", "stab")])
    def test_kernel_is_core(self, spec, sub):
        X = make(spec)
        if sub == "klein":
            H = GroupHandle([parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)(2 4)"), parse_cycles("(1 2)")], 4)
        elif sub == "stab2":
            H = X.stabilizer(0, 1)
        else:
            H = X.stabilizer(0)
        ca = coset_action(X, H)
        assert ca.kernel.order() == core_small(X, H).core.order()

    def test_image_is_homomorphic(self):
        X = make("PSL2:7")
        H = X.stabilizer(0, 1)
        ca = coset_action(X, H)
        assert ca.image.order() * ca.kernel.order() == X.order()

    def test_index_limit(self):
        with pytest.raises(IndexTooLarge):
            coset_action(make("A:9"), make("A:4").extend(9), limit=100)

    def test_not_subgroup(self):
        with pytest.raises(ValueError):
            coset_action(make("A:5"), GroupHandle([parse_cycles("(1 2)")], 5))


class TestTwoTransitive:
    def test_agl32(self):
        assert is_2transitive(make("AGL32"))

    def test_regular_is_not(self):
        assert not is_2transitive(make("D:12"))

    def test_a4(self):
        assert is_2transitive(make("A:4"))


class TestBlocks:
    def test_d12_antipodal(self):
        blocks = minimal_blocks(make("D:12"), (0, 6))
        assert all(len(b) == 2 for b in blocks) and len(blocks) == 6

    def test_c4(self):
        assert minimal_blocks(make("C:4"), (0, 2)) == [[0, 2], [1, 3]]

    def test_m12_primitive(self):
        assert is_primitive(make("M12"))

    @pytest.mark.parametrize("spec", ["D:12", "C:8", "D:8", "prod(S:3, C:3)", "S:4", "AGL32"])
    def test_oracle(self, spec):
        X = make(spec)
        if not is_transitive(X):
            return
        elems = list(closure(X.gen_tuples, X.degree))
        for b in range(1, X.degree):
            blocks = minimal_blocks(X, (0, b))
            block0 = [bl for bl in blocks if 0 in bl][0]
            assert block0 == smallest_block(elems, X.degree, 0, b)


class TestQuasiprimitive:
    def test_agl32(self):
        assert is_quasiprimitive(make("AGL32")).status == "yes"

    def test_pgl211_on_a5(self):
        ca = coset_action(make("PGL2:11"), a5_in_psl211())
        v = is_quasiprimitive(ca.image)
        assert v.status == "no"
        assert v.witness_orbits == [11, 11]
        assert v.witness.order() == 660

    def test_a5(self):
        assert is_quasiprimitive(make("A:5")).status == "yes"

    def test_intransitive(self):
        assert is_quasiprimitive(GroupHandle([parse_cycles("(1 2)")], 3)).status == "no"

    @pytest.mark.parametrize("spec", ["D:12", "C:7", "S:4", "A:4", "PGL2:5", "PSL2:7", "AGL32", "D:8", "GL32", "S:5"])
    def test_oracle(self, spec):
        X = make(spec)
        if not is_transitive(X):
            return
        elems = closure(X.gen_tuples, X.degree)
        assert (is_quasiprimitive(X).status == "yes") == quasiprimitive(elems, X.degree)

    @pytest.mark.parametrize("spec", ["S:5", "PGL2:5", "A:5"])
    def test_oracle_cosets(self, spec):
        X = make(spec)
        H = X.stabilizer(0, 1)
        img = coset_action(X, H).image
        elems = closure(img.gen_tuples, img.degree)
        assert (is_quasiprimitive(img).status == "yes") == quasiprimitive(elems, img.degree)


def test_report_json_and_implications():
    rep = analyze_action(make("M12"), RandomSource(1))
    d = rep.as_dict()
    assert d["two_transitive"] and d["primitive"] and d["quasiprimitive"] == "yes"
    rep = analyze_action(make("D:12"), RandomSource(1))
    assert not rep.primitive and rep.blocks is not None
