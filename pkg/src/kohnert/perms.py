"""Weak compositions and permutations of finite support.

Compositions are tuples of non-negative integers with trailing zeros trimmed,
conceptually extended by an infinite zero tail.  Permutations are tuples in
one-line notation (1-indexed values), canonicalized to the minimal window:
the last entry is not a fixed point unless the window is ``(1,)``.  Indices
beyond the window are fixed points.

>>> lehmer_code((2, 5, 1, 6, 7, 4, 3))
(1, 3, 0, 2, 2, 1)
>>> perm_from_code((1, 3, 0, 2, 2, 1))
(2, 5, 1, 6, 7, 4, 3)
>>> sorted(reduced_words((3, 2, 1)))
[(1, 2, 1), (2, 1, 2)]
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations as _all_windows
from typing import Iterable, Iterator

Composition = tuple[int, ...]
Permutation = tuple[int, ...]
Partition = tuple[int, ...]


class BoundExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured bound."""


# ---------------------------------------------------------------------------
# compositions


def composition(parts: Iterable[int]) -> Composition:
    """Canonical form: validate entries and trim trailing zeros."""
    out = list(parts)
    if any(p < 0 for p in out):
        raise ValueError(f"composition parts must be non-negative: {out}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def parse_composition(text: str) -> Composition:
    """Parse comma-separated parts, e.g. '1,3,0,2,2,1'; '0' is the empty one."""
    text = text.strip()
    if not text:
        return ()
    try:
        return composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad composition {text!r}: {exc}") from None


def format_composition(alpha: Composition) -> str:
    return ",".join(map(str, alpha)) if alpha else "0"


def weight(alpha: Composition) -> int:
    return sum(alpha)


def sort_decreasing(alpha: Composition) -> Partition:
    """The partition obtained by sorting the parts in weakly decreasing order."""
    return tuple(sorted((p for p in alpha if p), reverse=True))


def strict_descents(alpha: Composition) -> set[int]:
    """Indices i with alpha_i > alpha_{i+1}, against the infinite zero tail.

    The last nonzero position always qualifies.

    >>> sorted(strict_descents((1, 3, 0, 2, 2, 1)))
    [2, 5, 6]
    """
    a = composition(alpha)
    ext = a + (0,)
    return {i for i in range(1, len(a) + 1) if ext[i - 1] > ext[i]}


def descents(alpha: Composition) -> set[int]:
    """Indices i <= last nonzero position with alpha_i >= alpha_{i+1}."""
    a = composition(alpha)
    ext = a + (0,)
    return {i for i in range(1, len(a) + 1) if ext[i - 1] >= ext[i]}


# ---------------------------------------------------------------------------
# permutations


def permutation(window: Iterable[int]) -> Permutation:
    """Canonical form: validate one-line notation, drop trailing fixed points.

    >>> permutation((2, 1, 3, 4))
    (2, 1)
    >>> permutation(())
    (1,)
    """
    w = tuple(window)
    n = len(w)
    if n == 0:
        return (1,)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    while n > 1 and w[n - 1] == n:
        n -= 1
    return w[:n]


def parse_permutation(text: str) -> Permutation:
    """Parse '3142' (single digits) or '3,1,4,2'."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        vals = [int(p) for p in text.split(",")]
    elif text.isdigit():
        vals = [int(ch) for ch in text]
    else:
        raise ValueError(f"bad permutation {text!r}")
    return permutation(vals)


def format_permutation(w: Permutation) -> str:
    w = permutation(w)
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def perm_apply(w: Permutation, i: int) -> int:
    """Value w(i), treating indices beyond the window as fixed points."""
    return w[i - 1] if i <= len(w) else i


def perm_inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, v in enumerate(w, start=1):
        inv[v - 1] = i
    return permutation(inv)


def perm_length(w: Permutation) -> int:
    """Number of inversions.

    >>> perm_length((3, 2, 1))
    3
    """
    w = tuple(w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_descents(w: Permutation) -> set[int]:
    """Indices j with w(j) > w(j+1).

    >>> sorted(perm_descents((2, 5, 1, 6, 7, 4, 3)))
    [2, 5, 6]
    """
    w = permutation(w)
    return {j for j in range(1, len(w)) if w[j - 1] > w[j]}


def perm_ascents_within(w: Permutation, n: int) -> list[int]:
    """Indices j < n with w(j) < w(j+1), reading w inside S_n."""
    return [j for j in range(1, n) if perm_apply(w, j) < perm_apply(w, j + 1)]


def multiply_s(w: Permutation, i: int) -> Permutation:
    """Right multiplication w * s_i: swap the entries at positions i, i+1."""
    if i < 1:
        raise ValueError("transposition index must be >= 1")
    v = list(w) + list(range(len(w) + 1, i + 2))
    v[i - 1], v[i] = v[i], v[i - 1]
    return permutation(v)


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation of S_n."""
    return permutation(range(n, 0, -1))


def identity() -> Permutation:
    return (1,)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All elements of S_n as canonical permutations."""
    for window in _all_windows(range(1, n + 1)):
        yield permutation(window)


def lehmer_code(w: Permutation) -> Composition:
    """code(w)_i = #{j > i : w(j) < w(i)}.

    >>> lehmer_code((3, 1, 4, 2))
    (2, 0, 1)
    """
    w = tuple(w)
    return composition(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))
    )


def perm_from_code(alpha: Composition) -> Permutation:
    """The unique permutation whose Lehmer code is alpha.

    Entry i is the (alpha_i + 1)-st smallest value not yet used.
    """
    a = composition(alpha)
    n = len(a) + (max(a) if a else 0)
    avail = list(range(1, n + 1))
    window = []
    for i in range(n):
        c = a[i] if i < len(a) else 0
        window.append(avail.pop(c))
    return permutation(window)


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> frozenset[tuple[int, ...]]:
    if perm_length(w) == 0:
        return frozenset({()})
    out = set()
    for i in perm_descents(w):
        for word in _reduced_words(multiply_s(w, i)):
            out.add(word + (i,))
    return frozenset(out)


def reduced_words(w: Permutation, max_length: int = 12) -> frozenset[tuple[int, ...]]:
    """All reduced words of w (sequences a with s_{a_1}...s_{a_l} = w, l = length).

    Refuses when the length exceeds ``max_length``; the count can grow
    factorially and the error carries the crude l! estimate.
    """
    w = permutation(w)
    ell = perm_length(w)
    if ell > max_length:
        raise BoundExceededError(
            f"length {ell} exceeds bound {max_length}; "
            f"up to {math.factorial(ell)} reduced words"
        )
    return _reduced_words(w)


def word_to_perm(word: Iterable[int]) -> Permutation:
    """Product s_{a_1} s_{a_2} ... s_{a_m} in one-line notation."""
    w = identity()
    for a in word:
        w = multiply_s(w, a)
    return w


def is_reduced(word: tuple[int, ...]) -> bool:
    return perm_length(word_to_perm(word)) == len(word)
