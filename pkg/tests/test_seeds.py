import random

import pytest

from gfans import (
    ExchangeMatrix,
    Seed,
    SignCoherenceViolation,
    apply_word,
    g_cone,
    initial_seed,
    mutate_seed,
    tropical_sign,
    verify_seed,
)
from gfans.seeds import (
    adjugate,
    cone_key,
    det,
    matmul,
    transpose,
    unimodular_inverse,
)
from conftest import MARKOV, WING
from test_exchange import random_skew_symmetrizable


def test_det_against_cofactor_expansion():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.choice([2, 3, 4])
        m = tuple(
            tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(n)
        )
        adj = adjugate(m)
        d = det(m)
        prod = matmul(m, adj)
        assert prod == tuple(
            tuple(d if i == j else 0 for j in range(n)) for i in range(n)
        )


def test_unimodular_inverse():
    m = ((1, 2, 0), (0, 1, 3), (0, 0, 1))
    inv = unimodular_inverse(m)
    n = len(m)
    assert matmul(m, inv) == tuple(
        tuple(int(i == j) for j in range(n)) for i in range(n)
    )
    with pytest.raises(ValueError):
        unimodular_inverse(((2, 0), (0, 1)))


def test_initial_seed_is_identity():
    s = initial_seed(ExchangeMatrix(MARKOV))
    assert s.c == s.g == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert s.word == ()
    for i in (1, 2, 3):
        assert tropical_sign(s, i) == 1


def test_mutation_is_involutive_on_seeds():
    rng = random.Random(2)
    for _ in range(25):
        B = random_skew_symmetrizable(rng, 3)
        s = apply_word(initial_seed(B), [rng.randint(1, 3) for _ in range(4)])
        k = rng.randint(1, 3)
        back = mutate_seed(mutate_seed(s, k), k)
        assert back.c == s.c
        assert back.g == s.g
        assert back.b.entries == s.b.entries


def test_word_then_reverse_returns_to_start():
    B = ExchangeMatrix(WING)
    word = [1, 3, 2, 2, 1, 3]
    s = apply_word(initial_seed(B), word + word[::-1])
    assert s.c == s.g == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_invariants_to_depth_four():
    for entries in (MARKOV, WING):
        B = ExchangeMatrix(entries)
        level = [initial_seed(B)]
        for _ in range(4):
            nxt = []
            for s in level:
                last = s.word[-1] if s.word else 0
                for k in range(1, 4):
                    if k == last:
                        continue
                    child = mutate_seed(s, k)
                    report = verify_seed(child)
                    assert all(report.values()), (child.word, report)
                    nxt.append(child)
            level = nxt


def test_tropical_sign_flips_after_mutation():
    s = initial_seed(ExchangeMatrix(MARKOV))
    s1 = mutate_seed(s, 2)
    assert tropical_sign(s1, 2) == -1


def test_sign_coherence_guard_rejects_bad_column():
    s = initial_seed(ExchangeMatrix(MARKOV))
    broken = Seed(s.b, ((1, 0, 0), (-1, 1, 0), (0, 0, 1)), s.g, ())
    with pytest.raises(SignCoherenceViolation):
        tropical_sign(broken, 1)
    with pytest.raises(SignCoherenceViolation):
        tropical_sign(Seed(s.b, ((0, 0, 0), (0, 1, 0), (0, 0, 1)), s.g), 1)


def test_mutation_direction_bounds():
    s = initial_seed(ExchangeMatrix(MARKOV))
    with pytest.raises(IndexError):
        mutate_seed(s, 0)
    with pytest.raises(IndexError):
        mutate_seed(s, 4)


def test_seed_json_round_trip():
    B = ExchangeMatrix(WING)
    s = apply_word(initial_seed(B), (1, 2, 3))
    back = Seed.from_json(s.to_json())
    assert back == s


def test_g_cone_rays_are_columns():
    s = apply_word(initial_seed(ExchangeMatrix(MARKOV)), (1,))
    cone = g_cone(s)
    assert cone.rays == tuple(s.g_vector(i) for i in (1, 2, 3))
    assert cone.normals == tuple(s.c_vector(i) for i in (1, 2, 3))
    assert cone.key == cone_key(cone.rays)
    # the key forgets ray order
    assert cone_key(reversed(cone.rays)) == cone.key
