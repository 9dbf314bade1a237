"""The polynomial bases and their splitting/expansion rules.

Key and Omega polynomials are built by operator recursion from the dominant
monomial; Schubert and Grothendieck polynomials descend from the staircase
monomial of the longest element.  A choice of block bounds d_1 < ... < d_k
splits the variables into consecutive alphabets X_1, ..., X_k, and any
polynomial symmetric in each alphabet expands uniquely into products of
Schur polynomials of the blocks; ``split_extract`` computes that expansion
greedily from leading monomials.

For key polynomials the block-Schur coefficients are counted by tuples of
increasing tableaux whose concatenated reading words insert to the peeling
tableau of alpha (``key_split_expansion``); for Schubert polynomials the
insertion constraint is dropped (``schubert_split_expansion``).  An
independent route through compatible pairs and the block-splitting map backs
both counts.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from . import diagrams, perms, tableaux
from .perms import Composition, Partition, Permutation
from .poly import ONE, ZERO, BetaCoeff, Polynomial
from .poly import demazure, divided_difference, isobaric, trim, twisted_demazure
from .tableaux import EMPTY_TABLEAU, Tableau

LambdaTuple = tuple[Partition, ...]


class BlockSymmetryError(ValueError):
    """Input polynomial is not symmetric within one of the variable blocks."""


class ExpansionCapError(RuntimeError):
    """Greedy basis expansion exceeded its step cap; ``partial`` holds the
    coefficients peeled so far and ``remainder`` the unexpanded rest."""

    def __init__(self, cap: int, partial: dict, remainder: Polynomial):
        super().__init__(f"basis expansion exceeded {cap} steps")
        self.partial = partial
        self.remainder = remainder


def _first_ascent(alpha: Composition) -> int | None:
    for i in range(len(alpha) - 1):
        if alpha[i] < alpha[i + 1]:
            return i + 1
    return None


def _dominant_monomial(alpha: Composition) -> Polynomial:
    return Polynomial.monomial(alpha)


@lru_cache(maxsize=None)
def _key(alpha: Composition) -> Polynomial:
    i = _first_ascent(alpha)
    if i is None:
        return _dominant_monomial(alpha)
    swapped = list(alpha)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return demazure(i, _key(trim(swapped)))


@lru_cache(maxsize=None)
def _omega(alpha: Composition) -> Polynomial:
    i = _first_ascent(alpha)
    if i is None:
        return _dominant_monomial(alpha)
    swapped = list(alpha)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return twisted_demazure(i, _omega(trim(swapped)))


def key_polynomial(alpha: Composition) -> Polynomial:
    """Demazure character of alpha: the dominant monomial when alpha is
    weakly decreasing, otherwise the symmetrizing operator applied across an
    ascent (the result is independent of which ascent is chosen)."""
    return _key(perms.composition(alpha))


def omega_polynomial(alpha: Composition) -> Polynomial:
    """Deformation of the key polynomial using the twisted operator; its
    lowest-degree homogeneous component is the key polynomial."""
    return _omega(perms.composition(alpha))


def _staircase(n: int) -> Polynomial:
    return Polynomial.monomial(tuple(range(n - 1, 0, -1)))


@lru_cache(maxsize=None)
def _schubert(w: Permutation, n: int) -> Polynomial:
    if w == perms.longest_element(n):
        return _staircase(n)
    i = perms.perm_ascents_within(w, n)[0]
    return divided_difference(i, _schubert(perms.multiply_s(w, i), n))


@lru_cache(maxsize=None)
def _grothendieck(w: Permutation, n: int) -> Polynomial:
    if w == perms.longest_element(n):
        return _staircase(n)
    i = perms.perm_ascents_within(w, n)[0]
    return isobaric(i, _grothendieck(perms.multiply_s(w, i), n))


def schubert(w: Permutation, n: int | None = None) -> Polynomial:
    """Schubert polynomial, by divided differences down from the staircase
    monomial of the longest element of S_n (n defaults to the window size;
    the result does not depend on it)."""
    w = perms.permutation(w)
    n = max(len(w), 2) if n is None else n
    if len(w) > n:
        raise ValueError(f"{w} does not lie in S_{n}")
    return _schubert(w, n)


def grothendieck(w: Permutation, n: int | None = None) -> Polynomial:
    """Grothendieck polynomial, by isobaric operators down from the staircase
    monomial; its lowest-degree component is the Schubert polynomial."""
    w = perms.permutation(w)
    n = max(len(w), 2) if n is None else n
    if len(w) > n:
        raise ValueError(f"{w} does not lie in S_{n}")
    return _grothendieck(w, n)


# ---------------------------------------------------------------------------
# block Schur polynomials and the splitting expansion


def block_variables(d: Sequence[int]) -> list[list[int]]:
    """Consecutive variable alphabets cut at d: block j is
    {d_{j-1}+1, ..., d_j} with d_0 = 0."""
    d = list(d)
    if any(b < 1 for b in d) or any(d[i] >= d[i + 1] for i in range(len(d) - 1)):
        raise ValueError(f"block bounds must be strictly increasing: {d}")
    out = []
    prev = 0
    for bound in d:
        out.append(list(range(prev + 1, bound + 1)))
        prev = bound
    return out


def schur_in_variables(lam: Partition, variables: Sequence[int]) -> Polynomial:
    """Schur polynomial of shape lam in the given variables, as the content
    generating function of semistandard tableaux; zero when lam has more
    rows than there are variables."""
    lam = tuple(lam)
    if not lam:
        return ONE
    if len(lam) > len(variables):
        return ZERO
    total = Polynomial()
    for t in tableaux.semistandard_tableaux(lam, len(variables)):
        exps = [0] * (max(variables))
        for row in t.rows:
            for v in row:
                exps[variables[v - 1] - 1] += 1
        total = total + Polynomial.monomial(exps)
    return total


def schur_block(lam: Partition, block_index: int, d: Sequence[int]) -> Polynomial:
    """Schur polynomial of the ``block_index``-th alphabet (1-indexed)."""
    blocks = block_variables(d)
    return schur_in_variables(lam, blocks[block_index - 1])


def _check_block_symmetry(f: Polynomial, d: Sequence[int]) -> None:
    blocks = block_variables(d)
    for j, block in enumerate(blocks, start=1):
        for i in block[:-1]:
            if f.apply_transposition(i) != f:
                raise BlockSymmetryError(
                    f"not symmetric in x{i}, x{i+1} (block {j})"
                )


def split_extract(f: Polynomial, d: Sequence[int]) -> dict[LambdaTuple, int]:
    """Expand a block-symmetric polynomial into products of block Schur
    polynomials by repeatedly peeling the leading monomial.

    The polynomial must be free of the b parameter, involve no variable past
    the last block bound, and be symmetric within every block (checked up
    front).  The expansion is exact and unique; coefficients are integers.
    """
    d = list(d)
    if not f.is_beta_free():
        raise ValueError("split extraction requires a b-free polynomial")
    if f.max_variable() > (d[-1] if d else 0):
        raise ValueError(
            f"polynomial involves x{f.max_variable()}, past the last block bound"
        )
    _check_block_symmetry(f, d)
    bounds = [0] + d
    out: dict[LambdaTuple, int] = {}
    g = f
    while not g.is_zero():
        m = g.leading_monomial()
        ext = m + (0,) * (bounds[-1] - len(m))
        lams = []
        for j in range(len(d)):
            seg = ext[bounds[j] : bounds[j + 1]]
            if any(seg[i] > seg[i + 1] for i in range(len(seg) - 1)):
                raise BlockSymmetryError(
                    f"leading monomial {m} not weakly increasing in block {j + 1}"
                )
            lams.append(trim(reversed(seg)))
        lams_t = tuple(lams)
        c = g.coefficient(m).get(0, 0)
        out[lams_t] = out.get(lams_t, 0) + c
        prod = ONE
        for j, lam in enumerate(lams_t, start=1):
            prod = prod * schur_block(lam, j, d)
        g = g - c * prod
    return {k: v for k, v in out.items() if v}


def minimal_blocks(alpha: Composition) -> tuple[int, ...]:
    """The smallest valid block bounds for alpha: its strict descents."""
    return tuple(sorted(perms.strict_descents(alpha)))


def _is_row_word_tableau(block: tuple[int, ...]) -> Tableau | None:
    """The increasing tableau whose reading word is ``block`` verbatim, if any."""
    if not block:
        return EMPTY_TABLEAU
    t = tableaux.insertion_tableau(block)
    return t if tableaux.row_word(t) == block else None


def _accept_block(block: tuple[int, ...], lower: int, max_rows: int) -> Tableau | None:
    if block and min(block) <= lower:
        return None
    t = _is_row_word_tableau(block)
    if t is None or len(t.rows) > max_rows:
        # More rows than the block has variables: the block Schur polynomial
        # vanishes, so the tuple indexes no basis element.
        return None
    return t


def _word_split_tuples(
    words: Sequence[tuple[int, ...]], d: Sequence[int]
) -> set[tuple[Tableau, ...]]:
    """Tuples (T_1, ..., T_k) of increasing tableaux whose concatenated
    reading words run over ``words``, with each block a verbatim reading
    word, min T_j exceeding the previous block bound, and at most as many
    rows as the block has variables."""
    k = len(d)
    bounds = [0] + list(d)
    out: set[tuple[Tableau, ...]] = set()
    for word in words:
        m = len(word)
        if k == 0:
            if m == 0:
                out.add(())
            continue

        def rec(start: int, j: int, acc: list[Tableau]) -> None:
            width = bounds[j + 1] - bounds[j]
            if j == k - 1:
                t = _accept_block(word[start:], bounds[j], width)
                if t is not None:
                    out.add(tuple(acc + [t]))
                return
            for end in range(start, m + 1):
                t = _accept_block(word[start:end], bounds[j], width)
                if t is not None:
                    rec(end, j + 1, acc + [t])

        rec(0, 0, [])
    return out


def key_split_expansion(
    alpha: Composition, d: Sequence[int] | None = None
) -> dict[LambdaTuple, tuple[int, list[tuple[Tableau, ...]]]]:
    """Block-Schur coefficients of the key polynomial with their witnesses.

    Enumerates reduced words in the insertion-fiber of the peeling tableau,
    splits them into consecutive blocks that are verbatim reading words, and
    groups the resulting tableau tuples by shape.
    """
    alpha = perms.composition(alpha)
    d = minimal_blocks(alpha) if d is None else tuple(d)
    if not perms.strict_descents(alpha) <= set(d):
        raise ValueError(f"blocks {d} miss a strict descent of {alpha}")
    t_ref = tableaux.peeling_tableau(alpha)
    w = perms.perm_from_code(alpha)
    fiber = tableaux.coxeter_knuth_class(t_ref, w)
    out: dict[LambdaTuple, tuple[int, list[tuple[Tableau, ...]]]] = {}
    for tup in sorted(
        _word_split_tuples(sorted(fiber), d), key=lambda ts: [t.rows for t in ts]
    ):
        lams = tuple(t.shape() for t in tup)
        count, wits = out.get(lams, (0, []))
        out[lams] = (count + 1, wits + [tup])
    return out


def key_split_count(
    alpha: Composition, d: Sequence[int], lams: LambdaTuple
) -> tuple[int, list[tuple[Tableau, ...]]]:
    """Coefficient of one shape tuple in ``key_split_expansion``."""
    lams = tuple(tuple(l) for l in lams)
    return key_split_expansion(alpha, d).get(lams, (0, []))


def schubert_split_expansion(
    w: Permutation, d: Sequence[int]
) -> dict[LambdaTuple, int]:
    """Block-Schur coefficients of the Schubert polynomial: tableau tuples as
    in ``key_split_expansion`` but over all reduced words, with no insertion
    constraint."""
    w = perms.permutation(w)
    d = tuple(d)
    if not perms.perm_descents(w) <= set(d):
        raise ValueError(f"blocks {d} miss a descent of {w}")
    words = sorted(perms.reduced_words(w))
    out: dict[LambdaTuple, int] = {}
    for tup in _word_split_tuples(words, d):
        lams = tuple(t.shape() for t in tup)
        out[lams] = out.get(lams, 0) + 1
    return out


def schubert_split_count(w: Permutation, d: Sequence[int], lams: LambdaTuple) -> int:
    return schubert_split_expansion(w, d).get(tuple(tuple(l) for l in lams), 0)


def key_split_expansion_via_pairs(
    alpha: Composition, d: Sequence[int] | None = None
) -> dict[LambdaTuple, int]:
    """Independent route to the key splitting coefficients: push the
    compatible pairs in the insertion fiber of the peeling tableau through
    the block-splitting map and count distinct insertion-tableau tuples."""
    alpha = perms.composition(alpha)
    d = minimal_blocks(alpha) if d is None else tuple(d)
    t_ref = tableaux.peeling_tableau(alpha)
    w = perms.perm_from_code(alpha)
    tuples: set[tuple[Tableau, ...]] = set()
    for word, marks in tableaux.compatible_pairs(w):
        if tableaux.insertion_tableau(word) != t_ref:
            continue
        parts = tableaux.split_compatible_pair((word, marks), d)
        tuples.add(tuple(p for p, _ in parts))
    out: dict[LambdaTuple, int] = {}
    for tup in tuples:
        lams = tuple(t.shape() for t in tup)
        out[lams] = out.get(lams, 0) + 1
    return out


def schubert_from_compatible_pairs(w: Permutation) -> Polynomial:
    """Schubert polynomial as the mark generating function of compatible
    pairs."""
    total = Polynomial()
    for _, marks in tableaux.compatible_pairs(w):
        exps = [0] * (max(marks) if marks else 0)
        for m in marks:
            exps[m - 1] += 1
        total = total + Polynomial.monomial(exps)
    return total


def key_by_insertion_fiber(alpha: Composition) -> Polynomial:
    """Key polynomial as the mark generating function of the compatible pairs
    whose word inserts to the peeling tableau of alpha."""
    alpha = perms.composition(alpha)
    t_ref = tableaux.peeling_tableau(alpha)
    w = perms.perm_from_code(alpha)
    total = Polynomial()
    for word, marks in tableaux.compatible_pairs(w):
        if tableaux.insertion_tableau(word) != t_ref:
            continue
        exps = [0] * (max(marks) if marks else 0)
        for m in marks:
            exps[m - 1] += 1
        total = total + Polynomial.monomial(exps)
    return total


# ---------------------------------------------------------------------------
# greedy expansions in the three bases

DEFAULT_EXPANSION_CAP = 10_000


def expand_in_basis(
    f: Polynomial,
    basis: str,
    step_cap: int = DEFAULT_EXPANSION_CAP,
    closure_cap: int = diagrams.DEFAULT_CLOSURE_CAP,
) -> dict[Composition, BetaCoeff]:
    """Expand a b-free polynomial over the chosen basis ('key', 'J' or
    'omega') by peeling leading monomials.

    Each step subtracts c * B_theta where x^theta is the current leading
    monomial and c its coefficient; every basis element has leading monomial
    x^theta with unit coefficient, so the leading monomial strictly drops.
    The key and J expansions provably terminate; the omega expansion is
    guarded by ``step_cap`` and raises ExpansionCapError carrying the partial
    result if exceeded.  Coefficients are elements of Z[b] (b enters only
    through the J basis).
    """
    if basis == "key":
        generator = key_polynomial
    elif basis == "J":
        generator = lambda a: diagrams.j_polynomial(a, closure_cap)  # noqa: E731
    elif basis == "omega":
        generator = omega_polynomial
    else:
        raise ValueError(f"unknown basis {basis!r}")
    if not f.is_beta_free():
        raise ValueError("basis expansion requires a b-free input polynomial")
    out: dict[Composition, BetaCoeff] = {}
    g = f
    steps = 0
    while not g.is_zero():
        if steps >= step_cap:
            raise ExpansionCapError(step_cap, out, g)
        theta = g.leading_monomial()
        b_theta = generator(theta)
        lead = b_theta.coefficient(theta)
        assert lead == {0: 1} and b_theta.leading_monomial() == theta
        c = g.coefficient(theta)
        acc = out.setdefault(theta, {})
        for deg, v in c.items():
            acc[deg] = acc.get(deg, 0) + v
            if not acc[deg]:
                del acc[deg]
        if not acc:
            del out[theta]
        g = g - b_theta.scale(c)
        steps += 1
    return out


def reconstruct_from_expansion(
    coeffs: Mapping[Composition, Mapping[int, int]],
    basis: str,
    closure_cap: int = diagrams.DEFAULT_CLOSURE_CAP,
) -> Polynomial:
    """Inverse of ``expand_in_basis``: sum of coeff * basis element."""
    if basis == "key":
        generator = key_polynomial
    elif basis == "J":
        generator = lambda a: diagrams.j_polynomial(a, closure_cap)  # noqa: E731
    elif basis == "omega":
        generator = omega_polynomial
    else:
        raise ValueError(f"unknown basis {basis!r}")
    total = Polynomial()
    for alpha, c in coeffs.items():
        total = total + generator(perms.composition(alpha)).scale(c)
    return total


def expansion_to_json_obj(coeffs: Mapping[Composition, Mapping[int, int]]) -> list:
    return [
        {"alpha": list(alpha), "coeff": sorted(coeffs[alpha].items())}
        for alpha in sorted(coeffs)
    ]


def split_expansion_to_json_obj(coeffs: Mapping[LambdaTuple, int]) -> list:
    return [
        {"lambdas": [list(l) for l in lams], "coeff": coeffs[lams]}
        for lams in sorted(coeffs)
    ]
