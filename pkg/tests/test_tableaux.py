from fractions import Fraction

import pytest

from kohnert import perms
from kohnert.tableaux import (
    EMPTY_TABLEAU,
    NonReducedWordError,
    Tableau,
    compatible_pairs,
    content,
    coxeter_knuth_class,
    egls_insert,
    insertion_tableau,
    min_entry,
    nil_left_key,
    peeling_tableau,
    row_word,
    semistandard_tableaux,
    split_compatible_pair,
    stable_compatible_pairs,
    word_class_closure,
)

T_BIG = Tableau([[1, 3, 4], [2, 5], [4, 6], [5], [6]])


class TestTableauBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Tableau([[1], [2, 3]])
        with pytest.raises(ValueError):
            Tableau([[0]])

    def test_shape_columns_roundtrip(self):
        assert T_BIG.shape() == (3, 2, 2, 1, 1)
        assert Tableau.from_columns(T_BIG.columns()) == T_BIG
        assert T_BIG.columns()[0] == [1, 2, 4, 5, 6]

    def test_predicates(self):
        assert T_BIG.is_increasing()
        assert not Tableau([[1, 1]]).is_increasing()
        assert Tableau([[1, 1], [2]]).is_semistandard()
        assert not Tableau([[1, 2], [2, 1]]).is_semistandard()

    def test_row_word(self):
        assert row_word(T_BIG) == (4, 3, 1, 5, 2, 6, 4, 5, 6)
        assert row_word(Tableau([[5]])) == (5,)
        assert row_word(Tableau([[1, 3]])) == (3, 1)

    def test_content_and_min(self):
        assert content(Tableau([[1, 1, 1], [2, 2], [4]])) == (3, 2, 0, 1)
        assert content(EMPTY_TABLEAU) == ()
        assert min_entry(T_BIG) == 1
        assert min_entry(EMPTY_TABLEAU) is None

    def test_render_and_json(self):
        assert Tableau([[1, 2], [3]]).render() == "1 2\n3"
        assert Tableau.from_json_obj(T_BIG.to_json_obj()) == T_BIG


class TestInsertion:
    def test_big_word_inserts_to_fixture(self):
        p, q = egls_insert((4, 3, 1, 5, 2, 6, 4, 5, 6))
        assert p == T_BIG
        assert q.shape() == p.shape()
        assert q.is_semistandard()
        assert content(q) == (1,) * 9

    def test_single_letter(self):
        p, q = egls_insert((7,))
        assert p == Tableau([[7]])
        assert q == Tableau([[1]])

    def test_non_reduced_rejected(self):
        with pytest.raises(NonReducedWordError):
            egls_insert((1, 1))
        with pytest.raises(NonReducedWordError):
            egls_insert((1, 2, 1, 2))

    def test_recording_tableau_content_is_marks(self):
        p, q = egls_insert((2, 1, 2), (1, 1, 2))
        assert content(q) == (2, 1)
        assert q.shape() == p.shape()

    def test_bad_marks_rejected(self):
        with pytest.raises(ValueError):
            egls_insert((1, 2), (2, 1))  # not weakly increasing
        with pytest.raises(ValueError):
            egls_insert((1, 2), (1, 1))  # must rise across an ascent

    def test_reinsertion_fixes_small_increasing_tableaux(self):
        # every increasing tableau on letters <= 4 with reduced reading word
        # is recovered from its own reading word
        seen = 0
        for w in perms.all_permutations(5):
            for word in perms.reduced_words(w):
                if len(word) > 4 or any(a > 4 for a in word):
                    continue
                t = insertion_tableau(word)
                assert insertion_tableau(row_word(t)) == t
                seen += 1
        assert seen > 50

    def test_injective_on_stable_pairs(self):
        for w in perms.all_permutations(4):
            pairs = stable_compatible_pairs(w, max_mark=3)
            images = {egls_insert(a, i) for a, i in pairs}
            assert len(images) == len(pairs)


class TestNilLeftKey:
    def test_worked_example(self):
        t = Tableau([[1, 2, 3], [2, 3], [4]])
        assert nil_left_key(t) == Tableau([[1, 1, 1], [2, 2], [4]])

    def test_single_column_fixed(self):
        t = Tableau([[2], [3], [5]])
        assert nil_left_key(t) == t

    def test_big_tableau_content(self):
        assert content(nil_left_key(T_BIG)) == (1, 3, 0, 2, 2, 1)

    def test_empty(self):
        assert nil_left_key(EMPTY_TABLEAU) == EMPTY_TABLEAU


class TestPeelingTableau:
    def test_big_composition(self):
        assert peeling_tableau((1, 3, 0, 2, 2, 1)) == T_BIG

    def test_small_cases(self):
        assert peeling_tableau((2, 1)) == Tableau([[1, 2], [2]])
        assert peeling_tableau((0, 1)) == Tableau([[2]])
        assert peeling_tableau(()) == EMPTY_TABLEAU

    def test_properties_sweep(self):
        from kohnert.harness import compositions_upto

        for alpha in compositions_upto(5, 3):
            t = peeling_tableau(alpha)
            w = perms.perm_from_code(alpha)
            assert tuple(sorted(t.shape(), reverse=True)) == perms.sort_decreasing(alpha)
            word = row_word(t)
            assert perms.is_reduced(word) and perms.word_to_perm(word) == w
            assert insertion_tableau(word) == t
            assert content(nil_left_key(t)) == alpha


class TestCoxeterKnuth:
    def test_class_of_longest_element_in_s3(self):
        # the braid relation identifies both words: one class, one tableau
        t121 = insertion_tableau((1, 2, 1))
        t212 = insertion_tableau((2, 1, 2))
        assert t121 == t212 == Tableau([[1, 2], [2]])
        cls = coxeter_knuth_class(t121, (3, 2, 1))
        assert cls == frozenset({(1, 2, 1), (2, 1, 2)})
        assert word_class_closure((1, 2, 1)) == cls

    def test_simple_transposition(self):
        assert coxeter_knuth_class(Tableau([[1]]), (2, 1)) == frozenset({(1,)})

    def test_big_class_contains_reading_word(self):
        cls = coxeter_knuth_class(T_BIG, (2, 5, 1, 6, 7, 4, 3))
        assert (4, 3, 1, 5, 2, 6, 4, 5, 6) in cls

    def test_relation_closure_matches_insertion_fibers(self):
        for w in perms.all_permutations(4):
            fibers = {}
            for word in perms.reduced_words(w):
                fibers.setdefault(insertion_tableau(word), set()).add(word)
            for t, words in fibers.items():
                assert word_class_closure(row_word(t)) == frozenset(words)
                assert coxeter_knuth_class(t, w) == frozenset(words)


class TestCompatiblePairs:
    def test_simple_cases(self):
        assert compatible_pairs((2, 1)) == [((1,), (1,))]
        assert compatible_pairs((1, 3, 2)) == [((2,), (1,)), ((2,), (2,))]

    def test_marks_bounded_by_letters(self):
        for word, marks in compatible_pairs((3, 1, 4, 2)):
            assert all(m <= a for m, a in zip(marks, word))
            assert all(marks[i] <= marks[i + 1] for i in range(len(marks) - 1))

    def test_split_simple(self):
        parts = split_compatible_pair(((2,), (1,)), (2,))
        assert parts == [(Tableau([[2]]), Tableau([[1]]))]

    def test_split_blocks_and_weight_preservation(self):
        word = (4, 3, 1, 5, 2, 6, 4, 5, 6)
        pairs = [
            (a, i) for a, i in compatible_pairs((2, 5, 1, 6, 7, 4, 3))
            if a == word
        ]
        assert pairs
        for a, i in pairs:
            parts = split_compatible_pair((a, i), (2, 5, 6))
            assert len(parts) == 3
            got = []
            for _, q in parts:
                got.extend(v for row in q.rows for v in row)
            assert sorted(got) == sorted(i)

    def test_split_rejects_bad_blocks(self):
        with pytest.raises(ValueError):
            split_compatible_pair(((2,), (1,)), (1,))  # descent 2 not covered
        with pytest.raises(ValueError):
            split_compatible_pair(((2,), (3,)), (2, 3))  # mark above letter

    def test_split_bijection_by_counting(self):
        # weight-preserving bijectivity onto same-shape tuples of increasing
        # and block-labelled semistandard tableaux, via cardinalities
        from kohnert import bases

        for w in perms.all_permutations(4):
            ds = sorted(perms.perm_descents(w))
            universe = [1, 2, 3]
            from itertools import combinations

            for r in range(len(universe) + 1):
                for extra in combinations(universe, r):
                    d = sorted(set(ds) | set(extra))
                    if not d and perms.perm_length(w) > 0:
                        continue
                    pairs = compatible_pairs(w)
                    if any(i and i[-1] > (d[-1] if d else 0) for _, i in pairs):
                        continue
                    images = {
                        tuple(split_compatible_pair(p, d)) for p in pairs
                    }
                    assert len(images) == len(pairs)
                    blocks = bases.block_variables(d)
                    total = 0
                    for lams, count in bases.schubert_split_expansion(w, d).items():
                        ways = 1
                        for lam, block in zip(lams, blocks):
                            ways *= sum(
                                1 for _ in semistandard_tableaux(lam, len(block))
                            )
                        total += count * ways
                    assert total == len(pairs)


def schur_by_integer_evaluation(lam, values):
    """Bialternant ratio at integer points; independent of tableaux."""
    n = len(values)
    if len(lam) > n:
        return 0
    lam = list(lam) + [0] * (n - len(lam))

    def det(mat):
        m = [row[:] for row in mat]
        size = len(m)
        result = Fraction(1)
        for col in range(size):
            pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                result = -result
            result *= m[col][col]
            inv = Fraction(1, m[col][col])
            for r in range(col + 1, size):
                factor = m[r][col] * inv
                if factor:
                    for c in range(col, size):
                        m[r][c] -= factor * m[col][c]
        return result

    num = [[Fraction(v) ** (lam[j] + n - 1 - j) for j in range(n)] for v in values]
    den = [[Fraction(v) ** (n - 1 - j) for j in range(n)] for v in values]
    ratio = det(num) / det(den)
    assert ratio.denominator == 1
    return int(ratio)


class TestSemistandardEnumeration:
    def test_counts(self):
        assert sum(1 for _ in semistandard_tableaux((2, 1), 3)) == 8
        assert sum(1 for _ in semistandard_tableaux((1, 1, 1), 2)) == 0
        assert list(semistandard_tableaux((), 3)) == [EMPTY_TABLEAU]

    def test_against_bialternant(self):
        from kohnert import bases

        for lam in [(1,), (2,), (2, 1), (3, 2), (2, 2, 1)]:
            for nvars in (2, 3):
                poly = bases.schur_in_variables(lam, list(range(1, nvars + 1)))
                for values in [(1, 2, 3)[:nvars], (2, 3, 5)[:nvars]]:
                    got = 0
                    for e, c in poly.terms.items():
                        term = c[0]
                        for i, q in enumerate(e):
                            term *= values[i] ** q
                        got += term
                    assert got == schur_by_integer_evaluation(lam, values)
