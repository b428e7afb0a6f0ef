import pytest
from hypothesis import given, settings

from src.core.braid_words import (
    Alphabet,
    BraidWord,
    Move,
    applicable_moves,
    apply_move,
    chi,
    compose,
    delete_strands,
    format_braid,
    invert_word,
    is_classical,
    is_pure,
    lambda_braid,
    parse_braid,
    permutation_of,
    power,
    random_word,
    restrict_to_cycle,
    rho,
    sigma,
    trivial,
    warrow_product,
)
from src.core.errors import (
    BraidSyntaxError,
    MoveNotApplicableError,
    NotAdmissibleError,
    StrandMismatchError,
)
from src.core.permutation import Permutation, tau
from tests.strategies import braid_words


def B(text, n=3):
    return parse_braid(text, n)


# -----------------------------------------------------------------------------
# Grammar
# -----------------------------------------------------------------------------
def test_parse_examples():
    assert B("").letters == ()
    assert B("s1 s2' r1").letters == (sigma(1), sigma(2, -1), rho(1))
    assert B("r1'", 2).letters == (rho(1),)
    assert format_braid(B("s1  s2'   r1")) == "s1 s2' r1"
    assert str(B("r2 s1")) == "r2 s1"


@pytest.mark.parametrize("text, position", [("s3", 0), ("s1 q2", 3), ("s1 s0", 3), ("r1 s2 t", 6)])
def test_parse_errors_report_position(text, position):
    with pytest.raises(BraidSyntaxError) as info:
        B(text)
    assert info.value.position == position


def test_strand_count_must_be_positive():
    with pytest.raises(ValueError):
        parse_braid("", 0)
    with pytest.raises(ValueError):
        BraidWord(0)


# -----------------------------------------------------------------------------
# Group operations
# -----------------------------------------------------------------------------
def test_compose_and_invert():
    assert compose(B("s1"), B("r2")) == B("s1 r2")
    assert B("s1") * B("r2") == B("s1 r2")
    assert invert_word(B("s1 r2")) == B("r2 s1'")
    assert ~lambda_braid(4) == B("r3 r2 r1", 4)
    assert invert_word(trivial(3)) == trivial(3)
    with pytest.raises(StrandMismatchError):
        compose(B("s1", 2), B("s1", 3))


def test_power():
    assert power(B("s1 r2"), 2) == B("s1 r2 s1 r2")
    assert B("s1 r2") ** -1 == B("r2 s1'")
    assert power(B("s1"), 0) == trivial(3)


def test_classical_and_pure():
    assert is_classical(B("s1 s2'"))
    assert not is_classical(B("s1 r2"))
    assert is_pure(B("s1 s1"))
    assert not is_pure(B("s1"))


@pytest.mark.parametrize("n", range(1, 7))
def test_lambda_braid_permutation(n):
    assert lambda_braid(n) == BraidWord(n, tuple(rho(i) for i in range(1, n)))
    assert permutation_of(lambda_braid(n)) == tau(n)
    assert permutation_of(power(lambda_braid(n), n)).is_identity()


def test_permutation_of():
    assert permutation_of(trivial(3)) == Permutation.identity(3)
    assert permutation_of(B("s1")) == Permutation.transposition(1, 3)
    # component 1 ends at position 3, 2 at 1, 3 at 2
    assert permutation_of(B("r1 r2")) == Permutation((3, 1, 2))


# -----------------------------------------------------------------------------
# Named braids
# -----------------------------------------------------------------------------
def test_chi_examples():
    assert chi(1, 2, 2).letters == (sigma(1), rho(1))
    assert chi(2, 1, 2).letters == (rho(1), sigma(1))
    assert chi(1, 3, 3).letters == (rho(1), sigma(2), rho(2), rho(1))
    assert chi(3, 1, 3).letters == (rho(2), rho(1), sigma(1), rho(2))


@pytest.mark.parametrize("n", range(2, 6))
def test_chi_is_pure(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert is_pure(chi(i, j, n))


@pytest.mark.parametrize("i, j, n", [(1, 1, 3), (0, 2, 3), (1, 4, 3)])
def test_chi_rejects_bad_indices(i, j, n):
    with pytest.raises(ValueError):
        chi(i, j, n)


def test_warrow_product():
    assert warrow_product([], 3) == trivial(3)
    assert warrow_product([(2, 1, 1)], 2) == chi(1, 2, 2)
    assert warrow_product([(2, 1, -1), (1, 3, 1)], 3) == compose(
        invert_word(chi(1, 2, 3)), chi(3, 1, 3)
    )
    for bad in ([(1, 1, 1)], [(1, 2, 0)], [(1, 2)], [(1, 5, 1)]):
        with pytest.raises(ValueError):
            warrow_product(bad, 3)


# -----------------------------------------------------------------------------
# Moves
# -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "before, move, site, after, n",
    [
        ("s1 s1'", Move.CANCEL, 1, "", 2),
        ("s2 s1' s1", Move.CANCEL, 2, "s2", 3),
        ("r1 r1", Move.VIRTUAL_R2, 1, "", 2),
        ("s1 s3", Move.FAR_COMMUTE, 1, "s3 s1", 4),
        ("r1 s3'", Move.FAR_COMMUTE, 1, "s3' r1", 4),
        ("s1 s2 s1", Move.BRAID, 1, "s2 s1 s2", 3),
        ("s2' s1' s2'", Move.BRAID, 1, "s1' s2' s1'", 3),
        ("r1 r2 r1", Move.VIRTUAL_BRAID, 1, "r2 r1 r2", 3),
        ("r1 r2 s1", Move.MIXED, 1, "s2 r1 r2", 3),
        ("r1 r2 s1'", Move.MIXED, 1, "s2' r1 r2", 3),
        ("s2 r1 r2", Move.MIXED, 1, "r1 r2 s1", 3),
        ("r1 s2 s1", Move.OC, 1, "s2 s1 r2", 3),
        ("s2 s1 r2", Move.OC, 1, "r1 s2 s1", 3),
        ("s1' s2' r1", Move.OC, 1, "r2 s1' s2'", 3),
        ("r2 s1' s2'", Move.OC, 1, "s1' s2' r1", 3),
    ],
)
def test_rewriting_moves(before, move, site, after, n):
    assert apply_move(B(before, n), move, site) == B(after, n)


def test_move_accepts_string_names():
    assert apply_move(B("s1 s1'", 2), "cancel", 1) == trivial(2)


@pytest.mark.parametrize(
    "before, move, site, n",
    [
        ("s1 s2", Move.FAR_COMMUTE, 1, 3),
        ("s1 s1", Move.CANCEL, 1, 2),
        ("s1 s2' s1", Move.BRAID, 1, 3),
        ("s1 s2 s1", Move.OC, 1, 3),
        ("s1 s1'", Move.CANCEL, 2, 2),
        ("s1 s1'", Move.CANCEL, 0, 2),
    ],
)
def test_move_not_applicable(before, move, site, n):
    with pytest.raises(MoveNotApplicableError):
        apply_move(B(before, n), move, site)


def test_insertion_moves():
    w = B("s1 r2")
    assert apply_move(w, Move.CANCEL_INSERT, 1) == B("s1 s1' s1 r2")
    assert apply_move(w, Move.CANCEL_INSERT, 2, index=2, sign=-1) == B("s1 s2' s2 r2")
    assert apply_move(w, Move.VIRTUAL_R2_INSERT, 3, index=1) == B("s1 r2 r1 r1")
    with pytest.raises(MoveNotApplicableError):
        apply_move(w, Move.CANCEL_INSERT, 4)
    with pytest.raises(MoveNotApplicableError):
        apply_move(w, Move.VIRTUAL_R2_INSERT, 1, index=3)


def test_applicable_moves():
    assert (Move.CANCEL, 1) in applicable_moves(B("s1 s1'", 2))
    assert (Move.BRAID, 1) in applicable_moves(B("s1 s2 s1"))
    assert applicable_moves(trivial(3)) == []
    for move, site in applicable_moves(B("r1 s2 s1 r2 r1 r2", 3)):
        apply_move(B("r1 s2 s1 r2 r1 r2", 3), move, site)


# -----------------------------------------------------------------------------
# Strand deletion
# -----------------------------------------------------------------------------
def test_delete_strands_examples():
    assert delete_strands(B("s1"), [1, 2]) == B("s1", 2)
    assert delete_strands(B("s1 s1", 2), [1]) == trivial(1)
    assert delete_strands(power(lambda_braid(3), 3), [1, 2]) == B("r1 r1", 2)
    assert delete_strands(chi(1, 3, 3), [1, 3]) == chi(1, 2, 2)
    assert delete_strands(B("s1 s2", 3), [1, 2, 3]) == B("s1 s2", 3)


def test_delete_strands_rejects_bad_keep_sets():
    with pytest.raises(NotAdmissibleError):
        delete_strands(B("s1", 2), [1])
    with pytest.raises(ValueError):
        delete_strands(B("s1", 2), [3])
    with pytest.raises(ValueError):
        delete_strands(B("s1", 2), [])


def test_restrict_to_cycle():
    assert restrict_to_cycle(B("s1"), 1) == B("s1", 2)
    assert restrict_to_cycle(B("s2"), 2) == B("s1", 2)
    assert restrict_to_cycle(B("s2"), 1) == trivial(1)


# -----------------------------------------------------------------------------
# Random words
# -----------------------------------------------------------------------------
def test_random_word():
    assert random_word(3, 0, Alphabet.WELDED, 1) == trivial(3)
    assert random_word(1, 5, Alphabet.WELDED, 1) == trivial(1)
    w = random_word(2, 20, "classical", 7)
    assert len(w) == 20
    assert all(letter in (sigma(1), sigma(1, -1)) for letter in w)
    assert all(letter.is_virtual for letter in random_word(4, 20, Alphabet.VIRTUAL, 3))
    assert random_word(4, 15, Alphabet.WELDED, 42) == random_word(4, 15, Alphabet.WELDED, 42)
    with pytest.raises(ValueError):
        random_word(3, -1, Alphabet.WELDED, 0)


@settings(max_examples=100, deadline=None)
@given(braid_words(4), braid_words(4))
def test_permutation_is_multiplicative(a, b):
    assert permutation_of(compose(a, b)) == permutation_of(a).then(permutation_of(b))


@settings(max_examples=100, deadline=None)
@given(braid_words(4))
def test_inverse_word(w):
    assert invert_word(invert_word(w)) == w
    assert permutation_of(invert_word(w)) == permutation_of(w).inverse()
    assert is_pure(compose(w, invert_word(w)))
