import pytest

from sumways.oracle import brute_partitions
from sumways.polygonal import (
    PartSet,
    PolygonalSpec,
    check_all_positive,
    count_partitions_with_parts,
    ordered_representation_counts,
    partition_count_grid,
    polygonal_number,
    polygonal_parts,
    polygonal_series,
)
from sumways.series import coeff, coeff2, intpoly


def test_polygonal_number_sequences():
    assert [polygonal_number(3, j) for j in range(8)] == [0, 1, 3, 6, 10, 15, 21, 28]
    assert [polygonal_number(4, j) for j in range(7)] == [0, 1, 4, 9, 16, 25, 36]
    assert [polygonal_number(5, j) for j in range(6)] == [0, 1, 5, 12, 22, 35]
    # first few entries follow the m-linear pattern for every polygon
    for m in range(3, 12):
        assert polygonal_number(m, 2) == m
        assert polygonal_number(m, 3) == 3 * m - 3
        assert polygonal_number(m, 4) == 6 * m - 8


def test_polygonal_number_validation():
    with pytest.raises(ValueError):
        polygonal_number(2, 3)
    with pytest.raises(ValueError):
        polygonal_number(3, -1)
    with pytest.raises(ValueError):
        PolygonalSpec(2, 10)
    with pytest.raises(ValueError):
        PolygonalSpec(3, -1)


def test_series_windows():
    s = polygonal_series(PolygonalSpec(3, 10))
    assert [e for e, c in enumerate(s.coeffs) if c] == [0, 1, 3, 6, 10]
    assert s.bound == 10
    s = polygonal_series(PolygonalSpec(4, 9))
    assert [e for e, c in enumerate(s.coeffs) if c] == [0, 1, 4, 9]
    s = polygonal_series(PolygonalSpec(7, 0))
    assert s.coeffs == (1,)


def test_ordered_counts_small():
    cubes = ordered_representation_counts(3, 3, 12)
    assert coeff(cubes, 0) == 1
    # 5 = 1+1+3 in three ordered ways; the oracle agrees and freezes it
    parts = polygonal_parts(3, 12)
    assert brute_partitions(parts, 3, 5, ordered=True) == 3
    assert coeff(cubes, 5) == 3
    fourth = ordered_representation_counts(4, 4, 16)
    assert brute_partitions(polygonal_parts(4, 16), 4, 7, ordered=True) == 4
    assert coeff(fourth, 7) == 4
    with pytest.raises(ValueError):
        ordered_representation_counts(3, 0, 10)


def test_ordered_counts_match_oracle():
    for m in (3, 4, 5):
        for k in (1, 2, 3):
            bound = 40
            power = ordered_representation_counts(m, k, bound)
            parts = polygonal_parts(m, bound)
            for N in range(bound + 1):
                assert coeff(power, N) == brute_partitions(
                    parts, k, N, ordered=True
                ), (m, k, N)


def test_check_all_positive():
    assert check_all_positive(intpoly([1, 1, 1]), 2) is None
    assert check_all_positive(intpoly([1, 0, 1]), 2) == 1
    assert check_all_positive(intpoly([0]), 0) == 0
    squares_cubed = ordered_representation_counts(4, 3, 100)
    assert check_all_positive(squares_cubed, 100) == 7
    triangles_cubed = ordered_representation_counts(3, 3, 500)
    assert check_all_positive(triangles_cubed, 500) is None


def test_check_all_positive_window_guard():
    p = intpoly([1, 1], bound=5)
    with pytest.raises(ValueError):
        check_all_positive(p, 6)
    with pytest.raises(ValueError):
        check_all_positive(p, -1)


def test_partset_validation():
    with pytest.raises(ValueError):
        PartSet(())
    with pytest.raises(ValueError):
        PartSet((3, 1))
    with pytest.raises(ValueError):
        PartSet((1, 1))
    with pytest.raises(ValueError):
        PartSet((-1, 2))
    assert polygonal_parts(3, 10).parts == (0, 1, 3, 6, 10)
    assert polygonal_parts(3, 10, include_zero=False).parts == (1, 3, 6, 10)


def test_partition_counts_small():
    parts = polygonal_parts(3, 10)
    assert count_partitions_with_parts(parts, 3, 5) == 1  # {1, 1, 3}
    assert count_partitions_with_parts(parts, 0, 0) == 1
    assert count_partitions_with_parts(parts, 0, 3) == 0
    # a single repeatable part
    assert count_partitions_with_parts(PartSet((2,)), 3, 6) == 1
    assert count_partitions_with_parts(PartSet((2,)), 3, 5) == 0
    # zero padding creates distinct multisets
    with_zero = count_partitions_with_parts(polygonal_parts(3, 6), 3, 6)
    without = count_partitions_with_parts(polygonal_parts(3, 6, False), 3, 6)
    assert with_zero > without


def test_partition_counts_match_oracle():
    for m in (3, 4):
        parts = polygonal_parts(m, 30)
        for k in (1, 2, 3, 4):
            for N in range(0, 31):
                assert count_partitions_with_parts(parts, k, N) == brute_partitions(
                    parts, k, N, ordered=False
                ), (m, k, N)


def test_partition_grid_shape():
    grid = partition_count_grid(polygonal_parts(3, 8), 3, 8)
    assert grid.bounds == (8, 3)
    assert len(grid.grid) == 9
    assert len(grid.grid[0]) == 4
    assert coeff2(grid, 0, 0) == 1


def test_positivity_readings_agree():
    # ordered k-tuples with zeros allowed exist exactly when some k-multiset
    # (zero included as a part) exists
    for m in (3, 4, 5):
        for k in (2, 3, 4):
            bound = 60
            power = ordered_representation_counts(m, k, bound)
            parts = polygonal_parts(m, bound)
            for N in range(bound + 1):
                ordered_pos = coeff(power, N) > 0
                unordered_pos = count_partitions_with_parts(parts, k, N) > 0
                assert ordered_pos == unordered_pos, (m, k, N)
