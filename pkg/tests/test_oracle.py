import itertools

import pytest

from dagsort import ComparisonProvider, HiddenOrder, InconsistentOrderError, build_dag, make_provider

from _instances import diamond


def test_make_provider_accepts_consistent_orders():
    assert make_provider(diamond(), [0, 1, 2, 3]).count == 0
    assert make_provider(diamond(), [0, 2, 1, 3]).count == 0


def test_make_provider_rejects_inconsistent_order():
    with pytest.raises(InconsistentOrderError):
        make_provider(diamond(), [1, 0, 2, 3])


def test_make_provider_rejects_non_permutation():
    with pytest.raises(ValueError):
        make_provider(diamond(), [0, 0, 2, 3])


def test_less_counts_each_call():
    provider = make_provider(build_dag(3, []), [0, 1, 2])
    assert provider.less(0, 1)
    assert provider.count == 1
    assert not provider.less(1, 0)
    assert provider.count == 2


def test_reversed_hidden_order():
    provider = make_provider(build_dag(3, []), [2, 1, 0])
    assert provider.less(2, 0)


def test_self_comparison_is_an_error():
    provider = make_provider(build_dag(2, []), [0, 1])
    with pytest.raises(ValueError):
        provider.less(1, 1)
    assert provider.count == 0


def test_strict_total_order():
    order = [3, 0, 4, 1, 2]
    provider = ComparisonProvider(HiddenOrder(order))
    for u, v in itertools.permutations(range(5), 2):
        assert provider.less(u, v) != provider.less(v, u)
    for a, b, c in itertools.permutations(range(5), 3):
        if provider.less(a, b) and provider.less(b, c):
            assert provider.less(a, c)


def test_hidden_order_roundtrip():
    assert HiddenOrder([2, 0, 1]).rank == [1, 2, 0]
    assert HiddenOrder([2, 0, 1]).ascending() == [2, 0, 1]


def test_count_is_read_only():
    provider = make_provider(build_dag(1, []), [0])
    with pytest.raises(AttributeError):
        provider.count = 5
