import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidhoms.screens import (
    corollary_range_check,
    generates_cyclic,
    screen_table,
    special_constraint,
    sym_hom_enumerate,
)


def divides_oracle(n, m):
    q = Fraction(m * (m - 1), n * (n - 1))
    return q.denominator == 1


def test_special_constraint_examples():
    assert special_constraint(5, 5)
    assert not special_constraint(5, 6)
    assert not special_constraint(5, 10)
    assert special_constraint(5, 16)
    assert special_constraint(1, 7) and special_constraint(4, 1)
    with pytest.raises(ValueError):
        special_constraint(0, 3)


@given(st.integers(2, 200), st.integers(1, 400))
def test_special_constraint_matches_oracle(n, m):
    assert special_constraint(n, m) == divides_oracle(n, m)


def test_corollary_range_has_exactly_three_exceptions_up_to_50():
    # m(m-1) can be divisible by n(n-1) in range when n is composite
    found = [(n, m) for n in range(5, 51) for m in range(2, 2 * n + 1)
             if m != n and not corollary_range_check(n, m)]
    assert found == [(6, 10), (15, 21), (21, 36)]
    assert 10 * 9 % (6 * 5) == 0 and 21 * 20 % (15 * 14) == 0 and 36 * 35 % (21 * 20) == 0


@pytest.mark.parametrize("n", [5, 7, 11, 13, 47])
def test_corollary_range_holds_for_primes(n):
    assert all(corollary_range_check(n, m) for m in range(2, 2 * n + 1) if m != n)


@pytest.mark.parametrize("n,m", [(4, 6), (5, 5), (5, 11), (5, 1)])
def test_corollary_range_rejects(n, m):
    with pytest.raises(ValueError):
        corollary_range_check(n, m)


def test_screen_table():
    rows = screen_table(5, 6)
    assert len(rows) == 10 + 12
    assert (5, 10, False) in rows and (5, 5, True) in rows and (6, 10, True) in rows
    assert screen_table(5, 5, m_max=3) == [(5, 1, True), (5, 2, False), (5, 3, False)]


# -- maps into symmetric groups ----------------------------------------------------

def relation_tuples_oracle(n, k):
    """Brute force over all tuples, with permutations stored as dicts."""
    perms = [dict(enumerate(p)) for p in itertools.permutations(range(k))]

    def mul(p, q):
        return {x: q[p[x]] for x in range(k)}

    out = []
    for t in itertools.product(perms, repeat=n - 1):
        ok = all(mul(mul(t[i], t[i + 1]), t[i]) == mul(mul(t[i + 1], t[i]), t[i + 1]) for i in range(n - 2))
        ok = ok and all(mul(t[i], t[j]) == mul(t[j], t[i]) for i in range(n - 1) for j in range(i + 2, n - 1))
        if ok:
            out.append(tuple(tuple(p[x] for x in range(k)) for p in t))
    return out


@pytest.mark.parametrize("n,k", [(3, 3), (4, 3), (3, 4), (5, 3)])
def test_sym_enumeration_matches_brute_force(n, k):
    sols = relation_tuples_oracle(n, k)
    rep = sym_hom_enumerate(n, k)
    assert rep.solutions == len(sols)
    # a relation-satisfying tuple has cyclic image iff all entries coincide
    noncyclic = [t for t in sols if len(set(t)) > 1]
    assert sorted(rep.noncyclic) == sorted(noncyclic)


def test_b3_into_s3_has_noncyclic_maps():
    rep = sym_hom_enumerate(3, 3)
    assert rep.solutions == 12 and len(rep.noncyclic) == 6 and not rep.all_cyclic
    assert ((1, 0, 2), (0, 2, 1)) in rep.noncyclic


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_b5_into_small_symmetric_groups_is_cyclic(k):
    rep = sym_hom_enumerate(5, k)
    assert rep.all_cyclic
    # cyclic images are constant tuples: one per permutation
    assert rep.solutions == [1, 2, 6, 24][k - 1]


def test_sym_report_formats():
    rep = sym_hom_enumerate(3, 3)
    data = rep.to_json()
    assert data["noncyclic_count"] == 6 and [[2, 1, 3], [1, 3, 2]] in data["noncyclic"]
    assert json.dumps(data, sort_keys=True) == json.dumps(sym_hom_enumerate(3, 3, workers=2).to_json(), sort_keys=True)
    assert "12 relation-satisfying tuples" in rep.to_text()


def test_sym_guards():
    with pytest.raises(ValueError):
        sym_hom_enumerate(1, 3)
    with pytest.raises(ValueError):
        sym_hom_enumerate(6, 6, max_tuples=1000)


def test_generates_cyclic():
    assert generates_cyclic(((1, 2, 0), (2, 0, 1)))
    assert not generates_cyclic(((1, 0, 2), (0, 2, 1)))
    assert generates_cyclic(((1, 0, 2, 3), (1, 0, 2, 3)))
    # two disjoint transpositions generate the Klein four-group
    assert not generates_cyclic(((1, 0, 2, 3), (0, 1, 3, 2)))
    assert generates_cyclic(((1, 0, 3, 2), (1, 0, 3, 2), (0, 1, 2, 3)))
