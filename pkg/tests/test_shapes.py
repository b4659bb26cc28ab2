import pytest

from giambelli_snf.shapes import (
    BorderStrip,
    Cell,
    Partition,
    SkewShape,
    diagonal_hook,
    frobenius,
    hook_length,
    hook_lengths,
    partitions_of,
    partitions_up_to,
    rank,
    rim_decomposition,
    ribbon_to_skew,
)

P = Partition


def cells(*pairs):
    return tuple(Cell(i, j) for i, j in pairs)


def test_parse_and_validate():
    assert P.parse("4,3,1").parts == (4, 3, 1)
    assert P.parse("").parts == ()
    assert P((2, 1, 0)).parts == (2, 1)
    with pytest.raises(ValueError, match="'x'"):
        P.parse("2,x")
    with pytest.raises(ValueError):
        P((1, 2))


def test_partition_counts():
    # p(n) for n = 0..12
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert [sum(1 for _ in partitions_of(n)) for n in range(13)] == expected
    assert sum(1 for _ in partitions_up_to(10)) == 138


@pytest.mark.parametrize("parts,r", [((2, 1), 1), ((), 0), ((4, 3, 3, 1), 3)])
def test_rank(parts, r):
    assert rank(P(parts)) == r


@pytest.mark.parametrize(
    "parts,alphas,betas",
    [((3, 2, 1), (2, 0), (2, 0)), ((1,), (0,), (0,)), ((4, 3, 3, 1), (3, 1, 0), (3, 1, 0)), ((4, 2, 1), (3, 0), (2, 0)), ((), (), ())],
)
def test_frobenius(parts, alphas, betas):
    fr = frobenius(P(parts))
    assert (tuple(fr.alphas), tuple(fr.betas)) == (alphas, betas)
    assert P.from_frobenius(alphas, betas) == P(parts)


def test_diagonal_hook_examples():
    assert diagonal_hook(P((2, 1)), 1) == set(cells((1, 1), (1, 2), (2, 1)))
    assert diagonal_hook(P((2, 1)), 2) == set()
    assert diagonal_hook(P((2, 2)), 2) == {Cell(2, 2)}


def test_hook_length_examples():
    assert hook_length(P((2, 1)), Cell(1, 1)) == 3
    assert hook_length(P((2, 2)), Cell(1, 1)) == 3
    assert hook_length(P((5,)), Cell(1, 2)) == 4
    with pytest.raises(ValueError):
        hook_length(P((2, 1)), Cell(2, 2))


def test_conjugate_and_contents():
    p = P((4, 3, 1))
    assert p.conjugate() == P((3, 2, 2, 1))
    assert p.conjugate().conjugate() == p
    assert sorted(p.contents()) == sorted(c.col - c.row for c in p.cells())
    assert P((2, 2, 1)).weighted_size == 0 * 2 + 1 * 2 + 2 * 1


def test_rim_decomposition_examples():
    assert [s.cells for s in rim_decomposition(P((3, 2, 1)))] == [
        cells((3, 1), (2, 1), (2, 2), (1, 2), (1, 3)),
        cells((1, 1)),
    ]
    assert [s.cells for s in rim_decomposition(P((1,)))] == [cells((1, 1))]
    assert [s.cells for s in rim_decomposition(P((2, 2)))] == [cells((2, 1), (2, 2), (1, 2)), cells((1, 1))]


def test_ribbon_to_skew_examples():
    assert ribbon_to_skew(BorderStrip(cells((1, 1), (1, 2), (1, 3))))[0] == SkewShape(P((3,)))
    assert ribbon_to_skew(BorderStrip(cells((3, 1), (2, 1), (1, 1))))[0] == SkewShape(P((1, 1, 1)))
    assert ribbon_to_skew(BorderStrip(cells((2, 1), (2, 2), (1, 2))))[0] == SkewShape(P((2, 2)), P((1,)))


def test_border_strip_rejects_bad_shapes():
    with pytest.raises(ValueError):
        BorderStrip(cells((1, 1), (1, 3)))
    with pytest.raises(ValueError):
        BorderStrip(cells((2, 1), (2, 2), (1, 1), (1, 2)))
    with pytest.raises(ValueError):
        BorderStrip(cells((1, 2), (1, 1)))


def test_skew_shape_requires_containment():
    with pytest.raises(ValueError):
        SkewShape(P((2,)), P((1, 1)))
    assert SkewShape(P((2, 2)), P((1,))).size == 3


ALL12 = list(partitions_up_to(12))


def test_diagonal_hooks_partition_the_diagram():
    for p in ALL12:
        hooks = [diagonal_hook(p, i) for i in range(1, rank(p) + 1)]
        assert sum(len(h) for h in hooks) == p.size
        assert set().union(*hooks) == set(p.cells())
        fr = frobenius(p)
        for i, h in enumerate(hooks, 1):
            arm = sum(1 for c in h if c.row == i and c.col > i)
            leg = sum(1 for c in h if c.col == i and c.row > i)
            assert (arm, leg) == (fr.alphas[i - 1], fr.betas[i - 1])
        assert P.from_frobenius(fr.alphas, fr.betas) == p


def test_rim_decomposition_invariants():
    for p in ALL12:
        rims = rim_decomposition(p)
        r = rank(p)
        assert len(rims) == r
        assert sorted(c for s in rims for c in s) == sorted(p.cells())
        for k, s in enumerate(rims, 1):
            # outermost rim first, so rim k meets the main diagonal at (r-k+1, r-k+1)
            assert Cell(r - k + 1, r - k + 1) in s.cells
            assert s.end_content - s.start_content + 1 == len(s)


def test_hook_lengths_product_counts_syt():
    # hook length formula against a direct count of standard tableaux
    from math import factorial, prod

    def syt(p):
        if p.size <= 1:
            return 1
        total = 0
        for i in range(1, len(p) + 1):
            if p[i] > p[i + 1]:
                parts = list(p.parts)
                parts[i - 1] -= 1
                total += syt(P(parts))
        return total

    for p in partitions_up_to(8):
        assert syt(p) * prod(hook_lengths(p).values()) == factorial(p.size)
