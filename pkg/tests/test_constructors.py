from __future__ import annotations

import json
import math

import pytest

from oracles import closure, conj, inv
from skewfact.actions import is_2transitive, is_regular, is_transitive
from skewfact.constructors import (
    FixtureIntegrityError,
    SpecError,
    a5_in_psl211,
    fixture_hash,
    lemma31_embedding,
    lemma32_embedding,
    load_fixture_file,
    m24_spectrum,
    make,
    pgl211_dihedral,
    theorem2_12_embedding,
    theorem2_embedding,
)
from skewfact.group import is_subgroup
from skewfact.subgroups import core_small, intersection_small


class TestFamilies:
    def test_pgl211(self):
        X = make("PGL2:11")
        assert (X.degree, X.order()) == (12, 1320)

    def test_agl32(self):
        X = make("AGL32")
        assert (X.degree, X.order()) == (8, 1344)
        assert is_2transitive(X)

    def test_gl32_is_zero_stabilizer(self):
        X = make("AGL32")
        assert X.stabilizer(0).order() == make("GL32").order() == 168

    def test_dihedral_regular(self):
        X = make("D:12")
        assert (X.degree, X.order()) == (12, 12) and is_regular(X)

    @pytest.mark.parametrize("k", [4, 6, 8, 10, 16])
    def test_dihedral_regular_family(self, k):
        assert is_regular(make(f"D:{k}"))

    @pytest.mark.parametrize("n", range(3, 11))
    def test_symmetric_alternating(self, n):
        assert make(f"S:{n}").order() == math.factorial(n)
        A = make(f"A:{n}")
        assert A.order() == math.factorial(n) // 2
        assert all(g.parity() == "even" for g in A.generators)

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_psl_index_two(self, p):
        P, L = make(f"PGL2:{p}"), make(f"PSL2:{p}")
        assert P.order() == (p + 1) * p * (p - 1)
        assert P.order() == 2 * L.order()
        assert is_subgroup(L, P)
        assert is_2transitive(P) and is_2transitive(L)

    def test_prod(self):
        X = make("prod(A:5, C:2)")
        assert X.degree == 7 and X.order() == 120
        supports = [set(g.support()) for g in X.generators]
        assert all(s <= set(range(5)) or s <= {5, 6} for s in supports)

    @pytest.mark.parametrize("bad", ["D:5", "D:2", "PSL2:9", "PGL2:2", "Q:3", "prod(A:5)", "A:", "M13"])
    def test_bad_specs(self, bad):
        with pytest.raises(SpecError):
            make(bad)


class TestMathieu:
    @pytest.mark.parametrize(
        "name,order,degree",
        [("M11", 7920, 12), ("M12", 95040, 12), ("M12.2", 190080, 24), ("M23", 10200960, 24), ("M24", 244823040, 24)],
    )
    def test_orders(self, name, order, degree):
        X = make(name)
        assert X.order() == order and X.degree == degree

    def test_m11_inside_m12(self):
        M11 = make("M11")
        assert is_subgroup(M11, make("M12")) and M11.stabilizer(0).order() == 720

    def test_m23_inside_m24(self):
        assert is_subgroup(make("M23"), make("M24"))

    def test_aut_m12_contains_m12_with_index_two(self):
        X = make("M12.2")
        # the two blocks of 12 points are swapped by an outer element
        assert is_transitive(X)
        assert X.stabilizer(0).order() == 7920

    def test_spectrum_fixture(self):
        spec = m24_spectrum()
        assert 23 in spec["element_orders"] and 24 not in spec["element_orders"]
        assert spec["provenance"]

    def test_integrity_error(self, tmp_path):
        good = {"name": "C3", "degree": 3, "generators": [[1, 2, 0]], "expected_order": "3", "provenance": "test"}
        p = tmp_path / "c3.json"
        p.write_text(json.dumps(good))
        assert load_fixture_file(p).order() == 3
        for bad in (
            dict(good, expected_order="4"),
            dict(good, generators=[[0, 0, 1]]),
            dict(good, expected_order=3),
            {"degree": 3},
        ):
            p.write_text(json.dumps(bad))
            with pytest.raises(FixtureIntegrityError):
                load_fixture_file(p)

    def test_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SKEWFACT_FIXTURES", str(tmp_path))
        (tmp_path / "M11.json").write_text(
            json.dumps({"name": "M11", "degree": 3, "generators": [[1, 2, 0]], "expected_order": "7920", "provenance": "x"})
        )
        with pytest.raises(FixtureIntegrityError):
            make("M11")

    def test_hash_stable(self):
        assert fixture_hash() == fixture_hash() and len(fixture_hash()) == 16


class TestLemma31:
    def test_m6(self):
        e = lemma31_embedding(6)
        assert (e.X.order(), e.G.order(), e.D.order) == (5040, 360, 14)
        assert intersection_small(e.G, e.D.group).order() == 1
        assert core_small(e.X, e.D.group).core.order() == 1
        assert e.D.reflection.parity() == "even"

    def test_m8(self):
        assert lemma31_embedding(8).X.order() == 362880

    def test_relations_by_oracle(self):
        e = lemma31_embedding(6)
        a, b = e.D.rotation.images, e.D.reflection.images
        assert conj(a, b) == inv(a)

    @pytest.mark.parametrize("m", [4, 7])
    def test_bad_m(self, m):
        with pytest.raises(SpecError):
            lemma31_embedding(m)


class TestLemma32:
    def test_m2(self):
        e = lemma32_embedding(2)
        assert (e.X.order(), e.D.order) == (40320, 16)
        assert intersection_small(e.G, e.D.group).order() == 1
        assert core_small(e.X, e.D.group).core.order() == 1
        assert e.D.rotation.order() == 8 and e.D.rotation.parity() == "even"

    def test_m3(self):
        assert lemma32_embedding(3).X.order() == 479001600

    def test_bad_m(self):
        with pytest.raises(SpecError):
            lemma32_embedding(1)


class TestTheorem2:
    def test_m8(self):
        e = theorem2_embedding(8)
        assert e.X.order() == 181440 == e.G.order() * 18 // 2
        meet = intersection_small(e.G, e.D.group)
        assert meet.order() == 2
        t = [g for g in meet.generators if not g.is_identity()][0]
        assert t(8) == 8 and t.order() == 2
        assert e.D.reflection.parity() == "even"

    def test_m8_doubled(self):
        e = theorem2_embedding(8, doubled=True)
        assert e.X.order() == 362880 == e.G.order() * 36 // 2
        assert e.D.order == 36 and e.D.rotation.order() == 18
        assert intersection_small(e.G, e.D.group).order() == 2

    @pytest.mark.parametrize("m", [6, 10, 4])
    def test_excluded(self, m):
        with pytest.raises(SpecError):
            theorem2_embedding(m)

    def test_case12(self):
        e = theorem2_12_embedding()
        assert e.X.order() == 3960
        assert e.G.order() * e.D.order == 3960
        assert core_small(e.X, e.D.group).core.order() == 3
        assert e.D.rotation.order() == 33


def test_pgl211_dihedral_outside_psl():
    w = pgl211_dihedral()
    assert w.order == 22
    assert not make("PSL2:11").contains(w.reflection)


def test_a5_in_psl211():
    G = a5_in_psl211()
    assert G.order() == 60
    assert is_subgroup(G, make("PSL2:11"))
    assert len(closure(G.gen_tuples, 12)) == 60
