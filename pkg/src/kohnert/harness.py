"""Verification sweeps, JSON reports, and a persistent polynomial cache.

Each sweep runs a family of independent cases (one per composition or
permutation), comparing two routes to the same polynomial exactly.  A case
passes, fails with a minimal term diff, or is skipped when an enumeration
cap is hit; skipped cases are never counted as passes.  Case order and
report content are deterministic and independent of the worker count.

Set the environment variable KOHNERT_FAULT_INJECT to "family:param" to
perturb one coefficient of the computed side in that case; the sweep must
then report exactly one failure (used by the self-test).
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import __version__, bases, diagrams, perms, tableaux
from .perms import Composition
from .poly import Polynomial

FAMILIES = (
    "conj1",
    "conj2",
    "kohnert_key",
    "kohnert_schubert",
    "theorem1",
    "bjs",
    "theorem4",
    "talpha_props",
)

FAULT_ENV = "KOHNERT_FAULT_INJECT"
CACHE_ENV = "KOHNERT_CACHE"


@dataclass(frozen=True)
class VerificationCase:
    family: str
    param: str
    status: str  # pass | fail | skipped
    detail: dict | None = None

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "param": self.param,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class SweepReport:
    config: dict
    cases: list[VerificationCase]
    totals: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.totals:
            self.totals = {
                "pass": sum(1 for c in self.cases if c.status == "pass"),
                "fail": sum(1 for c in self.cases if c.status == "fail"),
                "skipped": sum(1 for c in self.cases if c.status == "skipped"),
                "total": len(self.cases),
            }

    def failed(self) -> int:
        return self.totals["fail"]

    def to_json_obj(self) -> dict:
        return {
            "config": self.config,
            "cases": [c.to_json_obj() for c in self.cases],
            "totals": self.totals,
            "meta": self.meta,
        }

    def deterministic_json(self) -> str:
        """Report serialization excluding volatile metadata (wall time,
        worker count); identical across --jobs settings."""
        obj = self.to_json_obj()
        obj.pop("meta")
        return json.dumps(obj, sort_keys=True)


def poly_diff(lhs: Polynomial, rhs: Polynomial) -> dict | None:
    """Minimal term diff, or None when equal.  Each entry is
    [exponents, coeff-on-lhs, coeff-on-rhs] for a differing exponent."""
    if lhs == rhs:
        return None
    diffs = []
    for e in sorted(set(lhs.terms) | set(rhs.terms)):
        cl = sorted(lhs.terms.get(e, {}).items())
        cr = sorted(rhs.terms.get(e, {}).items())
        if cl != cr:
            diffs.append([list(e), cl, cr])
    return {"terms": diffs}


# ---------------------------------------------------------------------------
# persistent polynomial cache


class PolynomialCache:
    """Content-addressed store of computed polynomials.

    Keys are (family tag, canonical parameter, code version); values are the
    polynomial JSON plus its own hash, revalidated on every read.  Corrupt
    or mismatched entries are dropped with a warning and recomputed.
    """

    def __init__(self, directory: str, version: str = __version__):
        self.directory = directory
        self.version = version
        os.makedirs(directory, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def _path(self, family: str, param: str) -> str:
        digest = hashlib.sha256(
            f"{family}|{param}|{self.version}".encode()
        ).hexdigest()
        return os.path.join(self.directory, digest + ".json")

    @staticmethod
    def _value_hash(value_obj: dict) -> str:
        return hashlib.sha256(
            json.dumps(value_obj, sort_keys=True).encode()
        ).hexdigest()

    def get(self, family: str, param: str) -> Polynomial | None:
        path = self._path(family, param)
        try:
            with open(path) as fh:
                obj = json.load(fh)
            if (obj["family"], obj["param"], obj["version"]) != (
                family,
                param,
                self.version,
            ):
                raise ValueError("key mismatch")
            if self._value_hash(obj["value"]) != obj["value_sha256"]:
                raise ValueError("content hash mismatch")
            poly = Polynomial.from_json_obj(obj["value"])
        except FileNotFoundError:
            self.misses += 1
            return None
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            print(
                f"warning: dropping corrupt cache entry for {family}:{param} ({exc})",
                file=sys.stderr,
            )
            self.misses += 1
            return None
        self.hits += 1
        return poly

    def put(self, family: str, param: str, poly: Polynomial) -> None:
        value = poly.to_json_obj()
        obj = {
            "family": family,
            "param": param,
            "version": self.version,
            "value_sha256": self._value_hash(value),
            "value": value,
        }
        path = self._path(family, param)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(obj, fh)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(
        self, family: str, param: str, compute: Callable[[], Polynomial]
    ) -> Polynomial:
        cached = self.get(family, param)
        if cached is not None:
            return cached
        poly = compute()
        self.put(family, param, poly)
        return poly


def _cached(
    cache_dir: str | None, family: str, param: str, compute: Callable[[], Polynomial]
) -> Polynomial:
    if cache_dir is None:
        return compute()
    return PolynomialCache(cache_dir).get_or_compute(family, param, compute)


# ---------------------------------------------------------------------------
# case execution (module level so worker processes can run them)


def _maybe_fault(family: str, param: str, poly: Polynomial) -> Polynomial:
    target = os.environ.get(FAULT_ENV)
    if target == f"{family}:{param}":
        return poly + Polynomial.monomial((1,))
    return poly


def _compare_case(
    family: str, param: str, lhs: Polynomial, rhs: Polynomial
) -> VerificationCase:
    lhs = _maybe_fault(family, param, lhs)
    if lhs == rhs:
        return VerificationCase(family, param, "pass")
    return VerificationCase(
        family,
        param,
        "fail",
        {
            "lhs": lhs.to_json_obj(),
            "rhs": rhs.to_json_obj(),
            "diff": poly_diff(lhs, rhs),
        },
    )


def _skip(family: str, param: str, exc: Exception) -> VerificationCase:
    return VerificationCase(family, param, "skipped", {"reason": str(exc)})


def _run_case(task: tuple) -> VerificationCase:
    family, param, cfg = task
    cap = cfg.get("cap", diagrams.DEFAULT_CLOSURE_CAP)
    cache_dir = cfg.get("cache_dir")
    if family == "conj1":
        alpha = perms.parse_composition(param)
        try:
            j = _cached(cache_dir, "J", param, lambda: diagrams.j_polynomial(alpha, cap))
        except diagrams.ClosureCapError as exc:
            return _skip(family, param, exc)
        omega = _cached(cache_dir, "omega", param, lambda: bases.omega_polynomial(alpha))
        return _compare_case(family, param, j.substitute_beta(-1), omega)
    if family == "kohnert_key":
        alpha = perms.parse_composition(param)
        try:
            j = _cached(cache_dir, "J", param, lambda: diagrams.j_polynomial(alpha, cap))
        except diagrams.ClosureCapError as exc:
            return _skip(family, param, exc)
        key = _cached(cache_dir, "key", param, lambda: bases.key_polynomial(alpha))
        return _compare_case(family, param, j.substitute_beta(0), key)
    if family == "conj2":
        w = perms.parse_permutation(param)
        try:
            k = _cached(cache_dir, "K", param, lambda: diagrams.k_polynomial(w, cap))
        except diagrams.ClosureCapError as exc:
            return _skip(family, param, exc)
        groth = _cached(cache_dir, "grothendieck", param, lambda: bases.grothendieck(w))
        return _compare_case(family, param, k.substitute_beta(-1), groth)
    if family == "kohnert_schubert":
        w = perms.parse_permutation(param)
        try:
            k = _cached(cache_dir, "K", param, lambda: diagrams.k_polynomial(w, cap))
        except diagrams.ClosureCapError as exc:
            return _skip(family, param, exc)
        schub = _cached(cache_dir, "schubert", param, lambda: bases.schubert(w))
        return _compare_case(family, param, k.substitute_beta(0), schub)
    if family == "theorem1":
        return _run_theorem1_case(param)
    if family == "bjs":
        w = perms.parse_permutation(param)
        try:
            lhs = bases.schubert_from_compatible_pairs(w)
        except perms.BoundExceededError as exc:
            return _skip(family, param, exc)
        return _compare_case(family, param, lhs, bases.schubert(w))
    if family == "theorem4":
        alpha = perms.parse_composition(param)
        try:
            lhs = bases.key_by_insertion_fiber(alpha)
        except perms.BoundExceededError as exc:
            return _skip(family, param, exc)
        return _compare_case(family, param, lhs, bases.key_polynomial(alpha))
    if family == "talpha_props":
        return _run_talpha_case(param)
    raise ValueError(f"unknown family {family!r}")


def _run_theorem1_case(param: str) -> VerificationCase:
    family = "theorem1"
    alpha = perms.parse_composition(param)
    d = bases.minimal_blocks(alpha)
    try:
        extracted = bases.split_extract(bases.key_polynomial(alpha), d)
        counted = {k: v[0] for k, v in bases.key_split_expansion(alpha, d).items()}
        via_pairs = bases.key_split_expansion_via_pairs(alpha, d)
    except perms.BoundExceededError as exc:
        return _skip(family, param, exc)
    if os.environ.get(FAULT_ENV) == f"{family}:{param}" and extracted:
        first = min(extracted)
        extracted = {**extracted, first: extracted[first] + 1}
    negatives = {k: v for k, v in extracted.items() if v < 0}
    if extracted == counted == via_pairs and not negatives:
        return VerificationCase(family, param, "pass")
    return VerificationCase(
        family,
        param,
        "fail",
        {
            "blocks": list(d),
            "extracted": bases.split_expansion_to_json_obj(extracted),
            "tableau_tuples": bases.split_expansion_to_json_obj(counted),
            "split_pairs": bases.split_expansion_to_json_obj(via_pairs),
            "negative": bases.split_expansion_to_json_obj(negatives),
        },
    )


def _run_talpha_case(param: str) -> VerificationCase:
    family = "talpha_props"
    alpha = perms.parse_composition(param)
    t = tableaux.peeling_tableau(alpha)
    w = perms.perm_from_code(alpha)
    word = tableaux.row_word(t)
    problems = []
    if tuple(sorted(t.shape(), reverse=True)) != perms.sort_decreasing(alpha):
        problems.append("shape is not the sorted composition")
    if not (perms.is_reduced(word) and perms.word_to_perm(word) == w):
        problems.append("reading word is not reduced for the coded permutation")
    elif tableaux.insertion_tableau(word) != t:
        problems.append("not fixed by reinsertion of its reading word")
    if tableaux.content(tableaux.nil_left_key(t)) != alpha:
        problems.append("nil left key content differs from the composition")
    if os.environ.get(FAULT_ENV) == f"{family}:{param}":
        problems.append("injected fault")
    if not problems:
        return VerificationCase(family, param, "pass")
    return VerificationCase(
        family, param, "fail", {"problems": problems, "tableau": t.to_json_obj()}
    )


# ---------------------------------------------------------------------------
# sweep drivers


def compositions_upto(max_weight: int, max_parts: int) -> list[Composition]:
    """Canonical compositions of weight <= max_weight with <= max_parts
    parts, in graded order (weight, part count, entries)."""
    found = set()
    for nparts in range(max_parts + 1):
        for parts in product(range(max_weight + 1), repeat=nparts):
            if parts and parts[-1] == 0:
                continue
            if sum(parts) <= max_weight:
                found.add(parts)
    return sorted(found, key=lambda a: (sum(a), len(a), a))


def _execute(tasks: list[tuple], jobs: int) -> list[VerificationCase]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_case(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_case, tasks, chunksize=1))


def _sweep(
    families_params: list[tuple[str, str]],
    config: dict,
    jobs: int,
    cap: int,
    cache_dir: str | None,
) -> SweepReport:
    cfg = {"cap": cap, "cache_dir": cache_dir}
    tasks = [(family, param, cfg) for family, param in families_params]
    started = time.time()
    cases = _execute(tasks, jobs)
    report = SweepReport(config=config, cases=cases)
    report.meta = {
        "jobs": jobs,
        "wall_time_s": round(time.time() - started, 3),
        "cache_dir": cache_dir,
    }
    return report


def _comp_params(max_weight: int, max_parts: int) -> list[str]:
    return [
        perms.format_composition(a) for a in compositions_upto(max_weight, max_parts)
    ]


def _perm_params(n: int) -> list[str]:
    return sorted(
        (perms.format_permutation(w) for w in perms.all_permutations(n)),
        key=lambda s: (len(s), s),
    )


def verify_conjecture1(
    max_weight: int = 7,
    max_parts: int = 4,
    jobs: int = 1,
    cache_dir: str | None = None,
    cap: int = diagrams.DEFAULT_CLOSURE_CAP,
) -> SweepReport:
    """Ghost-weighted skyline sum at b = -1 versus the twisted-operator
    polynomial, for every composition within the bounds."""
    params = _comp_params(max_weight, max_parts)
    config = {
        "family": "conj1",
        "max_weight": max_weight,
        "max_parts": max_parts,
        "cap": cap,
        "version": __version__,
    }
    return _sweep([("conj1", p) for p in params], config, jobs, cap, cache_dir)


def verify_conjecture2(
    n: int = 5,
    jobs: int = 1,
    cache_dir: str | None = None,
    cap: int = diagrams.DEFAULT_CLOSURE_CAP,
) -> SweepReport:
    """Ghost-weighted Rothe sum at b = -1 versus the Grothendieck
    polynomial, over all of S_n."""
    config = {"family": "conj2", "n": n, "cap": cap, "version": __version__}
    return _sweep([("conj2", p) for p in _perm_params(n)], config, jobs, cap, cache_dir)


def verify_kohnert(
    max_weight: int = 7,
    max_parts: int = 4,
    n: int = 5,
    jobs: int = 1,
    cache_dir: str | None = None,
    cap: int = diagrams.DEFAULT_CLOSURE_CAP,
) -> SweepReport:
    """Ghost-free slices: the b = 0 evaluations equal the key polynomial
    (skyline starts) and the Schubert polynomial (Rothe starts)."""
    pairs = [("kohnert_key", p) for p in _comp_params(max_weight, max_parts)]
    pairs += [("kohnert_schubert", p) for p in _perm_params(n)]
    config = {
        "family": "kohnert",
        "max_weight": max_weight,
        "max_parts": max_parts,
        "n": n,
        "cap": cap,
        "version": __version__,
    }
    return _sweep(pairs, config, jobs, cap, cache_dir)


def verify_theorem1(
    max_weight: int = 6,
    max_parts: int = 4,
    jobs: int = 1,
) -> SweepReport:
    """Key splitting coefficients: greedy Schur extraction, word-splitting
    tableau count, and the compatible-pair route must agree and be
    non-negative."""
    params = _comp_params(max_weight, max_parts)
    config = {
        "family": "theorem1",
        "max_weight": max_weight,
        "max_parts": max_parts,
        "version": __version__,
    }
    return _sweep([("theorem1", p) for p in params], config, jobs, 0, None)


def verify_bjs(n: int = 5, jobs: int = 1) -> SweepReport:
    """Compatible-pair generating function equals the Schubert polynomial."""
    config = {"family": "bjs", "n": n, "version": __version__}
    return _sweep([("bjs", p) for p in _perm_params(n)], config, jobs, 0, None)


def verify_theorem4(
    max_weight: int = 6, max_parts: int = 4, jobs: int = 1
) -> SweepReport:
    """Insertion-fiber formula equals the key polynomial."""
    params = _comp_params(max_weight, max_parts)
    config = {
        "family": "theorem4",
        "max_weight": max_weight,
        "max_parts": max_parts,
        "version": __version__,
    }
    return _sweep([("theorem4", p) for p in params], config, jobs, 0, None)


def verify_talpha_props(
    max_weight: int = 7, max_parts: int = 4, jobs: int = 1
) -> SweepReport:
    """Shape, reduced reading word, reinsertion fixed point and nil-left-key
    content of the peeling tableau."""
    params = _comp_params(max_weight, max_parts)
    config = {
        "family": "talpha_props",
        "max_weight": max_weight,
        "max_parts": max_parts,
        "version": __version__,
    }
    return _sweep([("talpha_props", p) for p in params], config, jobs, 0, None)
