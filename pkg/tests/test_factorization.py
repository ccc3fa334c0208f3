from __future__ import annotations

import pytest

from conftest import DIHEDRAL_CORPUS
from oracles import closure, has_dihedral, is_dihedral_group
from skewfact.constructors import (
    a5_in_psl211,
    lemma31_embedding,
    lemma32_embedding,
    make,
    pgl211_dihedral,
    theorem2_embedding,
)
from skewfact.factorization import (
    TABLE1,
    find_dihedral,
    find_element_of_order,
    find_regular_dihedral,
    is_product,
    match_table1,
    no_d46_by_normalizer,
    no_dihedral_by_normalizer,
    recognize_dihedral,
    verify_dihedral_skew,
    verify_skew_instance,
)
from skewfact.group import GroupHandle, RandomSource
from skewfact.perm import parse_cycles
from skewfact.witness import DihedralWitness, WitnessError


class TestWitness:
    def test_relations(self):
        w = DihedralWitness.from_pair(parse_cycles("(1 2 3 4)"), parse_cycles("(1 3)"), 4)
        assert w.n == 4 and w.order == 8 and all(w.relations().values())

    def test_bad_pair(self):
        with pytest.raises(WitnessError):
            DihedralWitness.from_pair(parse_cycles("(1 2 3 4)"), parse_cycles("(1 2)"), 4)

    def test_klein_flagged(self):
        w = DihedralWitness.from_pair(parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)(2 4)"), 4)
        assert w.degenerate


class TestProduct:
    def test_a5(self):
        X = make("A:5")
        pc = is_product(X, X.stabilizer(4), GroupHandle([parse_cycles("(1 2 3 4 5)")], 5))
        assert pc.ok and pc.exact and pc.order_meet == 1

    def test_m12(self):
        X = make("M12")
        w = find_regular_dihedral(X, RandomSource(3)).witness
        pc = is_product(X, X.stabilizer(11), w.group)
        assert pc.ok and pc.order_meet == 1

    def test_a9(self):
        e = theorem2_embedding(8)
        pc = is_product(e.X, e.G, e.D.group)
        assert pc.ok and pc.order_meet == 2

    def test_symmetric(self):
        e = lemma31_embedding(6)
        a, b = is_product(e.X, e.G, e.D.group), is_product(e.X, e.D.group, e.G)
        assert (a.ok, a.order_meet) == (b.ok, b.order_meet)

    def test_not_product(self):
        X = make("S:5")
        pc = is_product(X, X.stabilizer(0), X.stabilizer(1))
        assert not pc.ok


class TestRecognize:
    def test_d16(self):
        w = recognize_dihedral(make("D:16"))
        assert w is not None and w.n == 8

    def test_cyclic(self):
        assert recognize_dihedral(make("C:8")) is None

    def test_lemma32(self):
        e = lemma32_embedding(2)
        w = recognize_dihedral(e.D.group)
        assert w is not None and w.n == 8

    @pytest.mark.parametrize("spec", ["S:3", "D:8", "C:6", "A:4", "prod(S:3, C:3)", "D:12", "S:4"])
    def test_oracle(self, spec):
        X = make(spec)
        assert (recognize_dihedral(X) is not None) == is_dihedral_group(closure(X.gen_tuples, X.degree))


class TestFindDihedral:
    def test_pgl211(self):
        res = find_dihedral(make("PGL2:11"), 22, rng=RandomSource(1))
        assert res.found and res.witness.order == 22

    def test_psl211_times_2(self):
        res = find_dihedral(make("prod(PSL2:11, C:2)"), 22, "exhaustive", RandomSource(1))
        assert not res.found and res.evidence == "deterministic"

    def test_m12_times_2_spectrum(self):
        res = find_dihedral(make("prod(M12, C:2)"), 24, "exhaustive", RandomSource(1))
        assert not res.found and res.evidence == "deterministic" and res.method == "order-spectrum"

    def test_lagrange(self):
        res = find_dihedral(make("A:5"), 14)
        assert not res.found and res.method == "lagrange"

    def test_bad_order(self):
        with pytest.raises(ValueError):
            find_dihedral(make("A:5"), 7)

    def test_witness_recognized(self):
        res = find_dihedral(make("AGL32"), 8, "exhaustive", RandomSource(1))
        assert recognize_dihedral(res.witness.group) is not None


def _dihedral_cases():
    out = []
    for spec in DIHEDRAL_CORPUS:
        n_order = make(spec).order()
        for order in range(4, 25, 2):
            if n_order % order == 0:
                out.append((spec, order))
    return out


@pytest.mark.parametrize("spec,order", _dihedral_cases())
def test_exhaustive_matches_brute_force(spec, order):
    X = make(spec)
    res = find_dihedral(X, order, "exhaustive", RandomSource(5))
    assert res.evidence == "deterministic"
    assert res.found == has_dihedral(closure(X.gen_tuples, X.degree), order)
    if res.found:
        res.witness.verify()
        assert res.witness.order == order


class TestRegular:
    def test_a8(self):
        res = find_regular_dihedral(make("A:8"), RandomSource(1))
        assert res.found and res.witness.order == 8

    def test_m24(self):
        res = find_regular_dihedral(make("M24"), RandomSource(1))
        assert res.found and res.witness.order == 24

    def test_odd_degree(self):
        res = find_regular_dihedral(make("A:5"))
        assert not res.found and res.evidence == "deterministic"


class TestNormalizerArgument:
    def test_m23_times_2(self):
        v = no_d46_by_normalizer(make("prod(M23, C:2)"), 23, RandomSource(1))
        assert v.status == "no-dihedral" and v.normalizer_order == 506 and v.evidence == "deterministic"

    def test_m23(self):
        v = no_dihedral_by_normalizer(make("M23"), 23, RandomSource(1))
        assert v.status == "no-dihedral" and v.normalizer_order == 253

    def test_pgl211(self):
        v = no_dihedral_by_normalizer(make("PGL2:11"), 11, RandomSource(1))
        assert v.status == "dihedral-exists" and v.normalizer_order == 110
        a, t = v.rotation, v.inverting_involution
        assert t.order() == 2 and a**t == ~a

    def test_missing_element(self):
        with pytest.raises(LookupError):
            no_dihedral_by_normalizer(make("A:5"), 7, RandomSource(1))

    def test_element_search(self):
        assert find_element_of_order(make("M24"), 24, RandomSource(2), budget=2000) is None
        assert find_element_of_order(make("M24"), 23, RandomSource(2)).order() == 23


class TestCertificates:
    def test_row1(self):
        X = make("AGL32")
        w = find_regular_dihedral(X, RandomSource(1)).witness
        c = verify_dihedral_skew(X, X.stabilizer(0), w, RandomSource(1))
        assert c.matched_row == 1 and c.quasiprimitive == "yes" and c.dihedral_skew

    def test_row6(self):
        e = lemma31_embedding(6)
        c = verify_dihedral_skew(e.X, e.G, e.D, RandomSource(1))
        assert c.matched_row == 6 and c.row_parameter == 2 and c.quasiprimitive == "no"

    def test_row2(self):
        X = make("M12")
        w = find_regular_dihedral(X, RandomSource(1)).witness
        c = verify_dihedral_skew(X, X.stabilizer(11), w, RandomSource(1))
        assert c.matched_row == 2 and c.quasiprimitive == "yes"

    def test_row5_serialization(self):
        c = verify_dihedral_skew(make("PGL2:11"), a5_in_psl211(), pgl211_dihedral(), RandomSource(1))
        d = c.as_dict()
        assert d["order_X"] == "1320" and d["matched_row"] == 5

    def test_not_subgroup(self):
        # (1 2) is odd, so this S3 is not inside A5
        X = make("A:5")
        w = DihedralWitness.from_pair(parse_cycles("(1 2 3)"), parse_cycles("(1 2)"), 5)
        with pytest.raises(ValueError):
            verify_dihedral_skew(X, X.stabilizer(0), w)

    def test_inconsistent_flag(self):
        from skewfact.factorization import FactorizationCertificate

        with pytest.raises(AssertionError):
            FactorizationCertificate("x", 10, 5, 2, 2, True, False, 1, 1, "simple", "yes")


class TestSkew:
    @pytest.mark.parametrize("spec,p", [("PSL2:11", 11), ("A:7", 7)])
    def test_instances(self, spec, p):
        X = make(spec)
        G = a5_in_psl211() if spec == "PSL2:11" else X.stabilizer(6)
        c = find_element_of_order(X, p, RandomSource(1))
        cert = verify_skew_instance(X, G, c, RandomSource(1))
        assert cert.product_ok and cert.exact and cert.core_of_D_order == 1


class TestTable1:
    def test_rows(self):
        assert [r.row for r in TABLE1] == list(range(1, 9))
        assert [r.quasiprimitive for r in TABLE1] == [True] * 4 + [False] * 4

    def test_matching(self):
        assert match_table1(1344, 168, 8, True) == (1, None)
        assert match_table1(20160, 2520, 8, True) == (4, 2)
        assert match_table1(40320, 2520, 16, False) == (8, 2)
        assert match_table1(5040, 360, 14, False) == (6, 2)
        assert match_table1(5040, 360, 14, True) is None
        assert match_table1(60, 12, 5, None) is None

    def test_parametric_orders(self):
        assert TABLE1[3].orders(3) == (239500800, 19958400, 12)
        assert TABLE1[7].orders(3) == (479001600, 19958400, 24)
