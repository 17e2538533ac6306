"""Agreement of the two Morse recursions.

The curve recursion (along h0) and the axis recursion (along h1) only
have to agree on meanders; on permutations whose arcs cross they are
just two different sums.  The literal claim "agree whenever the h0 sum
closes at 0" over random permutations is therefore checked as an
expected failure, and the meander version is the real property test.
"""

import random
from collections import Counter

import pytest
from hypothesis import given

from conftest import meanders, random_meander
from sturmkit.meander import Meander, morse_along_h0, morse_along_h1
from sturmkit.perm import Permutation, parse

SEED = 20261018
TRIALS = 10_000


def random_perms(seed=SEED, trials=TRIALS, max_n=21):
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        im = list(range(1, n + 1))
        rng.shuffle(im)
        yield Permutation(tuple(im))


def closing_agreement(seed=SEED, trials=TRIALS):
    """Counter over (agree?, dissipative?, meander?) for perms whose h0 sum ends at 0."""
    tally = Counter()
    for s in random_perms(seed, trials):
        a = morse_along_h0(s)
        if a[-1] != 0:
            continue
        m = Meander.build(s)
        tally[(a == morse_along_h1(s), m.is_dissipative(), m.is_meander())] += 1
    return tally


def sturm_endpoints(seed=SEED, trials=TRIALS):
    """Sturm instances among random meanders and random perms, with min/endpoint checks."""
    rng = random.Random(seed)
    bad = checked = 0
    cands = list(random_perms(seed, trials))
    cands += [random_meander(rng, rng.randrange(1, 22, 2)) for _ in range(2000)]
    for s in cands:
        m = Meander.build(s)
        if not m.is_sturm():
            continue
        checked += 1
        mo = m.morse_seq
        if min(mo) != 0 or mo[0] != 0 or mo[-1] != 0:
            bad += 1
    return checked, bad


@pytest.fixture(scope="module")
def tally():
    return closing_agreement()


@pytest.mark.xfail(strict=True, reason="the two sums differ on permutations with crossing arcs")
def test_literal_claim_on_random_permutations(tally):
    assert all(agree for agree, _, _ in tally)


def test_disagreements_come_from_crossing_arcs(tally):
    # every dissipative meander agrees; every disagreement has crossing arcs or no dissipativity
    assert tally[(False, True, True)] == 0
    assert tally[(True, True, True)] > 0
    assert sum(v for (agree, *_), v in tally.items() if not agree) > 0


def test_small_counterexample():
    # the h0 sum closes at 0 and stays nonnegative, yet the axis sum differs
    s = parse("1 4 3 5 2")
    assert morse_along_h0(s) == [0, 1, 2, 1, 0]
    assert morse_along_h1(s) == [0, 4, 2, 1, 3]
    assert not Meander.build(s).is_meander()


@given(meanders())
def test_recursions_agree_on_meanders(s):
    assert morse_along_h0(s) == morse_along_h1(s)


def test_recursions_agree_on_many_random_meanders():
    rng = random.Random(SEED)
    for _ in range(2000):
        s = random_meander(rng, rng.randrange(1, 22, 2))
        assert morse_along_h0(s) == morse_along_h1(s)


def test_sturm_endpoints():
    checked, bad = sturm_endpoints(trials=3000)
    assert checked > 100 and bad == 0
