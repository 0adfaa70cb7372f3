from ibex.rng import Rng, derive, mix64

# Reference splitmix64 outputs; these pin the generator so instance sets
# replicate across implementations.
SEED0_VECTORS = [
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
]


def test_splitmix64_seed0_vectors():
    r = Rng(0)
    assert [r.next_u64() for _ in range(4)] == SEED0_VECTORS


def test_streams_are_reproducible():
    a, b = Rng(987654321), Rng(987654321)
    assert [a.next_u64() for _ in range(64)] == [b.next_u64() for _ in range(64)]


def test_derive_is_independent_of_parent_draws():
    r1 = derive(42, 7)
    parent = Rng(42)
    parent.next_u64()  # consuming the parent must not matter
    r2 = derive(42, 7)
    assert [r1.next_u64() for _ in range(8)] == [r2.next_u64() for _ in range(8)]
    assert derive(42, 8).next_u64() != derive(42, 7).next_u64()


def test_randint_bounds_and_uniform_range():
    r = Rng(3)
    vals = [r.randint(40, 60) for _ in range(2000)]
    assert min(vals) == 40 and max(vals) == 60
    r = Rng(4)
    us = [r.uniform() for _ in range(2000)]
    assert all(0.0 <= u < 1.0 for u in us)


def test_geometric_support_and_mean():
    r = Rng(5)
    qs = [r.geometric(0.25) for _ in range(4000)]
    assert min(qs) == 0
    mean = sum(qs) / len(qs)
    assert 2.5 < mean < 3.5  # expectation (1-p)/p = 3


def test_mix64_is_pure():
    assert mix64(123) == mix64(123)
