"""Root system construction, weight systems, and the invariant form."""

import random
from fractions import Fraction as Q

import pytest

from orbitchar import liecore as lc


def test_a2_build():
    rs = lc.build_root_system([("A", 2)])
    assert len(rs.positive_roots) == 3
    assert rs.cartan == ((2, -1), (-1, 2))


def test_a1xa1_build():
    rs = lc.build_root_system([("A", 1), ("A", 1)])
    assert len(rs.positive_roots) == 2
    assert rs.cartan == ((2, 0), (0, 2))


def test_g2_build():
    rs = lc.build_root_system([("G", 2)])
    assert len(rs.positive_roots) == 6
    lengths = sorted({rs.root_length_sq(r) for r in rs.positive_roots})
    assert lengths == [Q(2, 3), Q(2)]


@pytest.mark.parametrize(
    "factors,count",
    [
        ([("A", 1)], 1),
        ([("A", 3)], 6),
        ([("A", 5)], 15),
        ([("B", 2)], 4),
        ([("B", 3)], 9),
        ([("B", 4)], 16),
        ([("C", 3)], 9),
        ([("C", 4)], 16),
        ([("D", 4)], 12),
        ([("D", 5)], 20),
        ([("E", 6)], 36),
        ([("E", 7)], 63),
        ([("E", 8)], 120),
        ([("F", 4)], 24),
        ([("G", 2)], 6),
        ([("A", 2), ("B", 2)], 7),
    ],
)
def test_positive_root_counts(factors, count):
    rs = lc.build_root_system(factors)
    assert len(rs.positive_roots) == count


def test_cartan_sign_pattern():
    for factors in [[("B", 3)], [("C", 3)], [("F", 4)], [("G", 2)], [("D", 4)]]:
        rs = lc.build_root_system(factors)
        for i, row in enumerate(rs.cartan):
            assert row[i] == 2
            assert all(row[j] <= 0 for j in range(rs.rank) if j != i)


def test_block_diagonal_product():
    rs = lc.build_root_system([("A", 2), ("G", 2)])
    for i in range(2):
        for j in range(2, 4):
            assert rs.cartan[i][j] == 0 and rs.cartan[j][i] == 0
    # every root is supported on a single factor
    for rc in rs.positive_root_coords:
        assert not (any(rc[:2]) and any(rc[2:]))


@pytest.mark.parametrize(
    "factors,rank",
    [([("B", 1)], 1), ([("C", 1)], 1), ([("E", 5)], 5), ([("F", 3)], 3), ([("G", 3)], 3)],
)
def test_invalid_series_rank(factors, rank):
    with pytest.raises(ValueError):
        lc.build_root_system(factors)


def test_root_fw_coords_are_cartan_rows():
    rs = lc.build_root_system([("C", 3)])
    for fw, rc in zip(rs.positive_roots, rs.positive_root_coords):
        acc = [0] * rs.rank
        for i, b in enumerate(rc):
            for j in range(rs.rank):
                acc[j] += b * rs.cartan[i][j]
        assert tuple(acc) == fw


def test_weyl_dim_frozen_values():
    a2 = lc.build_root_system([("A", 2)])
    assert lc.weyl_dim(a2, (1, 1)) == 8
    a1 = lc.build_root_system([("A", 1)])
    assert lc.weyl_dim(a1, (1,)) == 2
    g2 = lc.build_root_system([("G", 2)])
    assert lc.weyl_dim(g2, lc.highest_short_root(g2)) == 7


def test_weyl_dim_rejects_non_dominant():
    a2 = lc.build_root_system([("A", 2)])
    with pytest.raises(ValueError):
        lc.weyl_dim(a2, (1, -1))


def test_example_module_weights():
    rs = lc.build_root_system([("A", 1), ("A", 1)])
    ws = lc.weight_system(rs, [(1, 1), (1, 0)])
    assert ws.zero_mult == 0
    assert dict(ws.entries) == {
        (1, 1): 1,
        (1, -1): 1,
        (-1, 1): 1,
        (-1, -1): 1,
        (1, 0): 1,
        (-1, 0): 1,
    }


def test_adjoint_a2_weights():
    rs = lc.build_root_system([("A", 2)])
    ws = lc.weight_system(rs, [(1, 1)])
    assert ws.zero_mult == 2
    roots = set(rs.positive_roots)
    negatives = {tuple(-m for m in r) for r in roots}
    assert set(ws.entries) == roots | negatives
    assert all(m == 1 for m in ws.entries.values())


@pytest.mark.parametrize("factors", [[("B", 2)], [("C", 3)], [("G", 2)]])
def test_little_adjoint_weights_are_short_roots(factors):
    rs = lc.build_root_system(factors)
    ws = lc.weight_system(rs, [lc.highest_short_root(rs)])
    shorts = {r for r in rs.positive_roots if rs.is_short_root(r)}
    shorts |= {tuple(-m for m in r) for r in shorts}
    assert set(ws.entries) == shorts
    assert all(m == 1 for m in ws.entries.values())


def test_multiplicity_constant_on_weyl_orbits():
    rs = lc.build_root_system([("B", 2)])
    ws = lc.weight_system(rs, [(1, 1)])
    for mu, m in ws.entries.items():
        for w in rs.weyl_orbit(mu):
            if any(w):
                assert ws.entries[w] == m


def _random_spec(rng, rs):
    k = rng.randint(1, 2)
    out = []
    for _ in range(k):
        out.append(tuple(rng.randint(0, 2) for _ in range(rs.rank)))
    return out


def test_dimension_matches_weyl_formula():
    rng = random.Random(20260817)
    systems = [
        [("A", 2)],
        [("A", 3)],
        [("B", 2)],
        [("B", 3)],
        [("C", 3)],
        [("G", 2)],
        [("A", 1), ("A", 2)],
        [("A", 1), ("B", 2)],
    ]
    for factors in systems:
        rs = lc.build_root_system(factors)
        for _ in range(3):
            spec = _random_spec(rng, rs)
            ws = lc.weight_system(rs, spec)
            assert ws.dim() == sum(lc.weyl_dim(rs, lam) for lam in spec)


def test_pairing_frozen_and_bilinear():
    assert lc.pairing((1, 0), lc.as_point((2, 4))) == 2
    rng = random.Random(7)
    for _ in range(20):
        mu = tuple(rng.randint(-3, 3) for _ in range(3))
        nu = tuple(rng.randint(-3, 3) for _ in range(3))
        h = lc.as_point([Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)])
        g = lc.as_point([Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)])
        q = Q(rng.randint(-9, 9), rng.randint(1, 9))
        both = tuple(a + b for a, b in zip(mu, nu))
        assert lc.pairing(both, h) == lc.pairing(mu, h) + lc.pairing(nu, h)
        scaled = tuple(q * a for a in h)
        hg = tuple(a + b for a, b in zip(h, g))
        assert lc.pairing(mu, scaled) == q * lc.pairing(mu, h)
        assert lc.pairing(mu, hg) == lc.pairing(mu, h) + lc.pairing(mu, g)


def test_dynkin_labels_frozen():
    a2 = lc.build_root_system([("A", 2)])
    assert lc.dynkin_labels(a2, lc.as_point((2, 2))) == (2, 2)
    aa = lc.build_root_system([("A", 1), ("A", 1)])
    assert lc.dynkin_labels(aa, lc.as_point((2, 4))) == (4, 8)


def test_dominance_iff_labels_nonnegative():
    rs = lc.build_root_system([("G", 2)])
    assert lc.dynkin_labels(rs, lc.as_point((3, 5))) == (1, 1)
    assert lc.is_dominant(rs, lc.as_point((3, 5)))
    assert not lc.is_dominant(rs, lc.as_point((1, 1)))
    assert not lc.is_dominant(rs, lc.as_point((-1, 2)))


def test_invariant_form_frozen_values():
    aa = lc.build_root_system([("A", 1), ("A", 1)])
    assert lc.invariant_form(aa).gram == ((2, 0), (0, 2))
    a2 = lc.build_root_system([("A", 2)])
    assert lc.invariant_form(a2).gram == ((2, -1), (-1, 2))


def _leading_minors_positive(gram):
    n = len(gram)
    for k in range(1, n + 1):
        sub = [list(row[:k]) for row in gram[:k]]
        det = _det(sub)
        if det <= 0:
            return False
    return True


def _det(a):
    n = len(a)
    a = [[Q(x) for x in row] for row in a]
    det = Q(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return Q(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Q(1) / a[col][col]
        for i in range(col + 1, n):
            f = a[i][col] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


@pytest.mark.parametrize(
    "factors", [[("A", 3)], [("B", 3)], [("C", 3)], [("F", 4)], [("G", 2)], [("A", 1), ("B", 2)]]
)
def test_form_positive_definite_and_reflection_invariant(factors):
    rs = lc.build_root_system(factors)
    form = lc.invariant_form(rs)
    assert _leading_minors_positive(form.gram)
    # s_i acts on coroot coordinates as a -> a - (C a)_i e_i
    g = [list(row) for row in form.gram]
    n = rs.rank
    for i in range(n):
        s = [[Q(1) if r == c else Q(0) for c in range(n)] for r in range(n)]
        for c in range(n):
            s[i][c] -= Q(rs.cartan[i][c])
        from orbitchar.linalg import matmul, transpose

        back = matmul(transpose(s), matmul(g, s))
        assert [[Q(x) for x in row] for row in back] == [list(row) for row in g]


def test_factor_scales():
    aa = lc.build_root_system([("A", 1), ("A", 1)])
    form = lc.invariant_form(aa, [Q(1), Q(3, 2)])
    assert form.gram == ((2, 0), (0, 3))
    with pytest.raises(ValueError):
        lc.invariant_form(aa, [Q(1)])
    with pytest.raises(ValueError):
        lc.invariant_form(aa, [Q(1), Q(-1)])


def test_norm_sq():
    aa = lc.build_root_system([("A", 1), ("A", 1)])
    form = lc.invariant_form(aa)
    assert lc.norm_sq(form, lc.as_point((2, 4))) == 40


def test_highest_roots():
    rs = lc.build_root_system([("A", 2)])
    assert lc.highest_roots(rs) == ((1, 1),)
    aa = lc.build_root_system([("A", 1), ("A", 1)])
    assert lc.highest_roots(aa) == ((2, 0), (0, 2))
    with pytest.raises(ValueError):
        lc.highest_short_root(rs)
