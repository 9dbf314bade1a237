"""Tableaux, column insertion of reduced words, and compatible sequences.

The central algorithm is the column insertion correspondence on reduced
words (Edelman-Greene style, in the column convention).  A letter v enters
the leftmost column and walks right:

* if the column has no entry larger than v, v lands at the bottom and a new
  box is created;
* if both v and v+1 are already present, the column is left unchanged and
  v+1 is carried to the next column;
* otherwise the smallest entry larger than v is replaced by v and that entry
  is carried to the next column.

For reduced input these cases are exhaustive, the insertion tableau is
increasing, its reading word (rows right-to-left, top to bottom) is a reduced
word for the same permutation, and the map (word, marks) -> (P, Q) is a
bijection onto pairs of an increasing tableau and a same-shape semistandard
recording tableau.

The nil left key of an increasing tableau reverses this walk: the entries of
column j are reverse-inserted down through columns j-1, ..., 1 of the
original tableau, and the values that exit column 1 form column j of the
result.  Reverse insertion of v into a column replaces the largest entry
smaller than v (carrying it left), except that when v is present, v-1 is
carried and the column is untouched.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from . import perms
from .perms import Composition, Partition, Permutation


class NonReducedWordError(ValueError):
    """Input word is not reduced (its length exceeds the permutation length)."""


class Tableau:
    """Filling of a partition shape, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        rs = tuple(tuple(int(v) for v in row) for row in rows)
        if any(len(r) == 0 for r in rs):
            raise ValueError("empty row in tableau")
        lengths = [len(r) for r in rs]
        if any(lengths[i] < lengths[i + 1] for i in range(len(rs) - 1)):
            raise ValueError(f"row lengths not weakly decreasing: {lengths}")
        if any(v < 1 for r in rs for v in r):
            raise ValueError("tableau entries must be positive")
        self.rows = rs

    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[list[int]]:
        ncols = len(self.rows[0]) if self.rows else 0
        return [
            [row[c] for row in self.rows if len(row) > c] for c in range(ncols)
        ]

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "Tableau":
        cols = [list(c) for c in cols if c]
        if any(len(cols[i]) < len(cols[i + 1]) for i in range(len(cols) - 1)):
            raise ValueError("column lengths not weakly decreasing")
        nrows = len(cols[0]) if cols else 0
        return cls(
            [c[r] for c in cols if len(c) > r] for r in range(nrows)
        )

    def is_increasing(self) -> bool:
        """Strictly increasing along rows and down columns."""
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def is_semistandard(self) -> bool:
        """Weakly increasing along rows, strictly increasing down columns."""
        for row in self.rows:
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def render(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)

    def to_json_obj(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Tableau":
        return cls(obj["rows"])

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]})"


EMPTY_TABLEAU = Tableau()


def row_word(t: Tableau) -> tuple[int, ...]:
    """Rows read right to left, top row first."""
    return tuple(v for row in t.rows for v in reversed(row))


def content(t: Tableau) -> Composition:
    """Multiplicity vector of the entries."""
    counts: dict[int, int] = {}
    for row in t.rows:
        for v in row:
            counts[v] = counts.get(v, 0) + 1
    top = max(counts, default=0)
    return perms.composition(counts.get(i, 0) for i in range(1, top + 1))


def min_entry(t: Tableau) -> int | None:
    return min((v for row in t.rows for v in row), default=None)


def _insert_letter(cols: list[list[int]], v: int) -> tuple[int, int]:
    """Walk v through the columns; return the (row, col) of the new box.

    Indices in the result are 0-based.  Columns are mutated in place.
    """
    c = 0
    while True:
        if c == len(cols):
            cols.append([v])
            return 0, c
        col = cols[c]
        larger = [z for z in col if z > v]
        if not larger:
            if col and col[-1] == v:
                raise NonReducedWordError(
                    f"insertion would duplicate {v}; word is not reduced"
                )
            col.append(v)
            return len(col) - 1, c
        z = min(larger)
        if z == v + 1 and v in col:
            v = v + 1
        else:
            if v in col:
                raise NonReducedWordError(
                    f"insertion would duplicate {v}; word is not reduced"
                )
            col[col.index(z)] = v
            v = z
        c += 1


def _check_stable_marks(word: Sequence[int], marks: Sequence[int]) -> None:
    if len(marks) != len(word):
        raise ValueError("marks must have the same length as the word")
    if any(m < 1 for m in marks):
        raise ValueError("marks must be positive")
    for j in range(len(word) - 1):
        if marks[j] > marks[j + 1]:
            raise ValueError(f"marks not weakly increasing at position {j + 1}")
        if word[j] < word[j + 1] and marks[j] >= marks[j + 1]:
            raise ValueError(f"marks must strictly increase across ascent at {j + 1}")


def egls_insert(
    word: Sequence[int], marks: Sequence[int] | None = None
) -> tuple[Tableau, Tableau]:
    """Column insertion of a reduced word; returns (P, Q).

    P is the increasing insertion tableau; Q records the mark of each step at
    the box it created and is semistandard with content the multiset of
    marks.  ``marks`` defaults to 1..m.  Raises NonReducedWordError for
    non-reduced input and ValueError for invalid marks.
    """
    word = tuple(int(a) for a in word)
    if any(a < 1 for a in word):
        raise ValueError("word letters must be positive")
    if not perms.is_reduced(word):
        raise NonReducedWordError(f"{word} is not a reduced word")
    if marks is None:
        marks = tuple(range(1, len(word) + 1))
    else:
        marks = tuple(int(m) for m in marks)
        _check_stable_marks(word, marks)
    cols: list[list[int]] = []
    recording: dict[tuple[int, int], int] = {}
    for a, m in zip(word, marks):
        r, c = _insert_letter(cols, a)
        recording[(r, c)] = m
    p = Tableau.from_columns(cols)
    q = Tableau(
        [
            [recording[(r, c)] for c in range(len(p.rows[r]))]
            for r in range(len(p.rows))
        ]
        if cols
        else []
    )
    assert p.is_increasing() and q.is_semistandard()
    return p, q


def insertion_tableau(word: Sequence[int]) -> Tableau:
    """The P-tableau of ``egls_insert``."""
    return egls_insert(word)[0]


def _reverse_insert(col: list[int], v: int) -> int:
    """Reverse step: carry out the largest entry below v, or v-1 when v sits
    in the column (leaving it unchanged)."""
    if v in col:
        out = v - 1
        if out not in col:
            raise ValueError(f"malformed column {col} for reverse insertion of {v}")
        return out
    smaller = [z for z in col if z < v]
    if not smaller:
        raise ValueError(f"no entry below {v} in column {col}")
    y = max(smaller)
    col[col.index(y)] = v
    return y


def nil_left_key(t: Tableau) -> Tableau:
    """Semistandard key tableau of the same shape; see the module docstring.

    The content of the result is the composition the tableau contributes to
    in the key expansion of Schubert polynomials.
    """
    if not t.rows:
        return EMPTY_TABLEAU
    source = t.columns()
    out_cols: list[list[int]] = [list(source[0])]
    for c in range(1, len(source)):
        work = [list(col) for col in source[:c]]
        labels = sorted(source[c], reverse=True)
        for j in range(c - 1, -1, -1):
            labels = [_reverse_insert(work[j], v) for v in labels]
            assert all(labels[i] > labels[i + 1] for i in range(len(labels) - 1))
        out_cols.append(sorted(labels))
    result = Tableau.from_columns(out_cols)
    assert result.shape() == t.shape()
    assert result.is_semistandard()
    return result


def peeling_tableau(alpha: Composition) -> Tableau:
    """Increasing tableau built by peeling descent chains off the permutation
    with Lehmer code alpha.

    Each column starts at the largest descent of the running permutation and
    repeatedly takes the largest descent smaller than the letter just used,
    multiplying it away, until none remains; the letters collected form the
    column, bottom to top.  The reading word is a reduced word for the coded
    permutation, the tableau is fixed by reinsertion, and the content of its
    nil left key is alpha.
    """
    alpha = perms.composition(alpha)
    u = perms.perm_from_code(alpha)
    cols: list[list[int]] = []
    while perms.perm_length(u) > 0:
        letters: list[int] = []
        bound: int | None = None
        while True:
            ds = [d for d in perms.perm_descents(u) if bound is None or d < bound]
            if not ds:
                break
            d = max(ds)
            letters.append(d)
            u = perms.multiply_s(u, d)
            bound = d
        cols.append(sorted(letters))
    t = Tableau.from_columns(cols) if cols else EMPTY_TABLEAU
    assert t.is_increasing()
    return t


# ---------------------------------------------------------------------------
# equivalence of reduced words


def _elementary_moves(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for p in range(len(word) - 2):
        a, b, c = word[p : p + 3]
        if a == c and abs(b - a) == 1:
            yield word[:p] + (b, a, b) + word[p + 3 :]
        if (a < c < b) or (b < c < a):
            yield word[:p] + (b, a, c) + word[p + 3 :]
        if (b < a < c) or (c < a < b):
            yield word[:p] + (a, c, b) + word[p + 3 :]


def word_class_closure(word: Sequence[int]) -> frozenset[tuple[int, ...]]:
    """Closure of a word under the elementary equivalence moves: the braid
    move on adjacent letters and the two order-pattern swaps."""
    start = tuple(int(a) for a in word)
    seen = {start}
    stack = [start]
    while stack:
        for nxt in _elementary_moves(stack.pop()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def coxeter_knuth_class(
    t: Tableau, w: Permutation | None = None, max_length: int = 12
) -> frozenset[tuple[int, ...]]:
    """All reduced words of w whose insertion tableau is t.

    ``w`` defaults to the permutation of the reading word of t.  Agrees with
    ``word_class_closure(row_word(t))``.
    """
    word = row_word(t)
    if w is None:
        w = perms.word_to_perm(word)
    if not perms.is_reduced(word) or perms.word_to_perm(word) != perms.permutation(w):
        raise NonReducedWordError(f"reading word {word} is not reduced for {w}")
    return frozenset(
        a for a in perms.reduced_words(w, max_length) if insertion_tableau(a) == t
    )


# ---------------------------------------------------------------------------
# compatible sequences

CompatiblePair = tuple[tuple[int, ...], tuple[int, ...]]


def _mark_choices(word: tuple[int, ...], cap_rule) -> Iterator[tuple[int, ...]]:
    m = len(word)

    def extend(prefix: list[int], j: int) -> Iterator[tuple[int, ...]]:
        if j == m:
            yield tuple(prefix)
            return
        lo = 1
        if prefix:
            lo = prefix[-1] + (1 if word[j - 1] < word[j] else 0)
        for v in range(lo, cap_rule(j) + 1):
            prefix.append(v)
            yield from extend(prefix, j + 1)
            prefix.pop()

    yield from extend([], 0)


def compatible_pairs(w: Permutation, max_length: int = 12) -> list[CompatiblePair]:
    """All (word, marks) with marks weakly increasing, strictly increasing
    across ascents of the word, and bounded above by the letters."""
    out = []
    for word in sorted(perms.reduced_words(w, max_length)):
        for marks in _mark_choices(word, lambda j: word[j]):
            out.append((word, marks))
    return out


def stable_compatible_pairs(
    w: Permutation, max_mark: int, max_length: int = 12
) -> list[CompatiblePair]:
    """Like ``compatible_pairs`` but with the per-letter bound replaced by a
    uniform cap on the marks."""
    out = []
    for word in sorted(perms.reduced_words(w, max_length)):
        for marks in _mark_choices(word, lambda j: max_mark):
            out.append((word, marks))
    return out


def split_compatible_pair(
    pair: CompatiblePair, d: Sequence[int]
) -> list[tuple[Tableau, Tableau]]:
    """Split a compatible pair into blocks by mark range and insert each block.

    Block j takes the consecutive entries whose marks lie in
    (d_{j-1}, d_j], with d_0 = 0; the split is unique because the marks
    weakly increase.  Returns the list of (P_j, Q_j); empty blocks give empty
    tableaux.  The descent set of the word's permutation must be contained in
    d.
    """
    word, marks = pair
    d = list(d)
    if any(d[i] >= d[i + 1] for i in range(len(d) - 1)) or (d and d[0] < 1):
        raise ValueError(f"block bounds must be strictly increasing: {d}")
    w = perms.word_to_perm(word)
    if not perms.perm_descents(w) <= set(d):
        raise ValueError(f"block bounds {d} do not contain the descents of {w}")
    if any(m > a for m, a in zip(marks, word)):
        raise ValueError("marks exceed their letters; pair is not compatible")
    if marks and (not d or marks[-1] > d[-1]):
        raise ValueError(f"marks {marks} exceed the last block bound")
    out = []
    pos = 0
    prev = 0
    for bound in d:
        end = pos
        while end < len(marks) and marks[end] <= bound:
            end += 1
        block_word, block_marks = word[pos:end], marks[pos:end]
        if any(m <= prev for m in block_marks):
            raise ValueError("marks are not weakly increasing")
        out.append(egls_insert(block_word, block_marks) if block_word else (EMPTY_TABLEAU, EMPTY_TABLEAU))
        pos = end
        prev = bound
    return out


# ---------------------------------------------------------------------------
# semistandard enumeration


def semistandard_tableaux(shape: Partition, max_entry: int) -> Iterator[Tableau]:
    """All semistandard fillings of ``shape`` with entries in 1..max_entry."""
    shape = tuple(shape)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"shape must be a partition: {shape}")
    if not shape:
        yield EMPTY_TABLEAU
        return
    if len(shape) > max_entry:
        return
    rows: list[list[int]] = [[0] * ln for ln in shape]

    def fill(r: int, c: int) -> Iterator[Tableau]:
        if r == len(shape):
            yield Tableau([tuple(row) for row in rows])
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            rows[r][c] = v
            yield from fill(nr, nc)

    yield from fill(0, 0)
