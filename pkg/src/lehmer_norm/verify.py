"""Exhaustive and seeded-random checks of the norm and code identities.

Every check walks its domain in ascending lex-rank order, so the first
recorded counterexample is the lex-least one.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

import numpy as np

from . import _kernels
from .distribution import (
    RecursionSession,
    decomposition_to_permutation,
    enumerate_decompositions,
    norm_histogram,
    oracle_degree,
    permutation_to_decomposition,
    s_k_bruteforce,
)
from .lehmer import (
    _code_digits,
    code_after_transposition,
    inverse_code,
    lehmer_code,
)
from .metric import norm, norm_of_adjacent_transposition, transposition_delta
from .perm import (
    adjacent_transposition,
    all_permutations,
    compose,
    identity,
    include_iota,
    inverse,
    reverse,
)

MAX_FAILURES_KEPT = 10
DEFAULT_SEED = 20240101


class ScopeError(ValueError):
    pass


@dataclass
class PropertyResult:
    name: str
    scope: str
    checked: int = 0
    failed: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    seed: int | None = None
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, **case: Any) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append({k: _plain(v) for k, v in case.items()})


@dataclass
class VerificationReport:
    suite: str
    scope: str
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def __getitem__(self, name: str) -> PropertyResult:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [f"suite {self.suite} ({self.scope})"]
        for p in self.properties:
            status = "PASS" if p.passed else "FAIL"
            seed = f" seed={p.seed}" if p.seed is not None else ""
            lines.append(
                f"{status} {p.name} [{p.scope}] checked={p.checked} failed={p.failed}"
                f"{seed} ms={p.millis:.1f}"
            )
            for case in p.failures:
                lines.append(f"    counterexample {json.dumps(case, sort_keys=True)}")
        lines.append("ALL PASS" if self.passed else "FAILURES FOUND")
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict[str, Any]]:
        return [
            {
                "name": p.name,
                "scope": p.scope,
                "checked": p.checked,
                "failed": p.failed,
                "seed": p.seed,
                "millis": round(p.millis, 3),
                "failures": p.failures,
            }
            for p in self.properties
        ]

    def to_json(self) -> str:
        doc = {"suite": self.suite, "scope": self.scope, "passed": self.passed,
               "properties": self.to_records()}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _plain(value: Any) -> Any:
    if hasattr(value, "word"):
        return list(value.word)
    if hasattr(value, "digits"):
        return list(value.digits)
    if hasattr(value, "blocks"):
        return [list(b) for b in value.blocks]
    if isinstance(value, np.integer):
        return int(value)
    return value


def _run(report: VerificationReport, name: str, scope: str,
         body: Callable[[PropertyResult], None], seed: int | None = None) -> None:
    result = PropertyResult(name, scope, seed=seed)
    t0 = time.perf_counter()
    body(result)
    result.millis = (time.perf_counter() - t0) * 1000
    report.properties.append(result)


# --- norm theorem ---------------------------------------------------------------

NORM_MIN_N, NORM_MAX_N = 2, 7
PAIRWISE_EXHAUSTIVE_MAX_N = 5


def check_triangle_random(n: int, pairs: int, seed: int = DEFAULT_SEED,
                          result: PropertyResult | None = None) -> PropertyResult:
    """Subadditivity ``LF(st) <= LF(s) + LF(t)`` on ``pairs`` seeded random pairs of S_n."""
    result = result or PropertyResult("triangle_random", f"{pairs} pairs in S_{n}", seed=seed)
    rng = np.random.default_rng(seed)
    base = np.tile(np.arange(1, n + 1, dtype=np.int64), (pairs, 1))
    sig = rng.permuted(base, axis=1)
    tau = rng.permuted(base, axis=1)
    # (sigma tau)(i) = sigma(tau(i))
    prod = np.take_along_axis(sig, tau - 1, axis=1)
    ns, nt, nst = (_kernels.norms_batch(w) for w in (sig, tau, prod))
    bad = np.flatnonzero(nst > ns + nt)
    result.checked += pairs
    result.failed += int(bad.size)
    for r in bad[:MAX_FAILURES_KEPT]:
        result.failures.append({"sigma": sig[r].tolist(), "tau": tau[r].tolist(),
                                "lhs": int(nst[r]), "rhs": int(ns[r] + nt[r])})
    return result


def verify_norm_theorem(n: int, samples: int = 10_000, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Minimality, maximality, transposition order, inclusion, symmetry,
    subadditivity and the transposition-delta identity over S_n.

    Subadditivity is exhaustive over S_n x S_n for ``n <= 5`` and uses
    ``samples`` seeded random pairs above that.
    """
    if not NORM_MIN_N <= n <= NORM_MAX_N:
        raise ScopeError(f"norm suite supports {NORM_MIN_N} <= n <= {NORM_MAX_N}, got {n}")
    perms = list(all_permutations(n))
    norms = [norm(p) for p in perms]
    e, rev = identity(n), reverse(identity(n))
    top = (1 << n) - (n + 1)
    report = VerificationReport("norm", f"n={n}")
    scope = f"S_{n}"

    def minimal(r: PropertyResult) -> None:
        for p, v in zip(perms, norms):
            r.record(v >= 0 and ((v == 0) == (p == e)), sigma=p, norm=v)

    def maximal(r: PropertyResult) -> None:
        for p, v in zip(perms, norms):
            r.record(v <= top and ((v == top) == (p == rev)), sigma=p, norm=v, max=top)

    def transpositions(r: PropertyResult) -> None:
        prev = None
        for s in range(1, n):
            v = norm(adjacent_transposition(n, s))
            expected = norm_of_adjacent_transposition(n, s)
            ok = v == expected == 1 << (n - 1 - s) and (prev is None or prev > v)
            r.record(ok, s=s, norm=v, expected=expected)
            prev = v

    def inclusion(r: PropertyResult) -> None:
        for p, v in zip(perms, norms):
            got = norm(include_iota(p))
            r.record(got == v, sigma=p, norm=v, included=got)

    def symmetry(r: PropertyResult) -> None:
        for p, v in zip(perms, norms):
            got = norm(inverse(p))
            r.record(got == v, sigma=p, norm=v, inverse_norm=got)

    def triangle(r: PropertyResult) -> None:
        if n <= PAIRWISE_EXHAUSTIVE_MAX_N:
            for (p, vp), (q, vq) in product(zip(perms, norms), repeat=2):
                got = norm(compose(p, q))
                r.record(got <= vp + vq, sigma=p, tau=q, lhs=got, rhs=vp + vq)
        else:
            check_triangle_random(n, samples, seed, r)

    def delta(r: PropertyResult) -> None:
        for p, v in zip(perms, norms):
            code = _code_digits(p.word)
            for s in range(1, n):
                after = norm(compose(p, adjacent_transposition(n, s)))
                got = transposition_delta(p, s)
                scale = 1 << (n - 1 - s)
                # |delta| == 2^-min(c_s, c_{s+1}) * LF(sigma_s)
                magnitude = scale >> min(code[s - 1], code[s])
                r.record(got == after - v and abs(got) == magnitude,
                         sigma=p, s=s, delta=got, expected=after - v)

    _run(report, "minimal", scope, minimal)
    _run(report, "maximal", scope, maximal)
    _run(report, "transposition_order", scope, transpositions)
    _run(report, "inclusion", f"S_{n} -> S_{n + 1}", inclusion)
    _run(report, "symmetry", scope, symmetry)
    if n <= PAIRWISE_EXHAUSTIVE_MAX_N:
        _run(report, "triangle", f"S_{n} x S_{n}", triangle)
    else:
        _run(report, "triangle", f"{samples} random pairs in S_{n}", triangle, seed=seed)
    _run(report, "transposition_delta", f"S_{n}, all s", delta)
    return report


# --- code lemmas ----------------------------------------------------------------

LEMMA_MIN_N, LEMMA_MAX_N = 2, 7


def verify_code_lemmas(n: int) -> VerificationReport:
    """Code bounds, composition inequality, inverse-code identities and the
    adjacent-transposition update.  Pairwise checks run over S_m x S_m with
    ``m = min(n, 5)``.
    """
    if not LEMMA_MIN_N <= n <= LEMMA_MAX_N:
        raise ScopeError(f"lemma suite supports {LEMMA_MIN_N} <= n <= {LEMMA_MAX_N}, got {n}")
    perms = list(all_permutations(n))
    codes = [_code_digits(p.word) for p in perms]
    report = VerificationReport("lemmas", f"n={n}")
    pair_n = min(n, PAIRWISE_EXHAUSTIVE_MAX_N)

    def value_bound(r: PropertyResult) -> None:
        for p, c in zip(perms, codes):
            for i in range(1, n + 1):
                r.record(p.word[i - 1] <= i + c[i - 1], sigma=p, i=i)

    def composition(r: PropertyResult) -> None:
        small = list(all_permutations(pair_n)) if pair_n != n else perms
        small_codes = {p: _code_digits(p.word) for p in small}
        for p, q in product(small, repeat=2):
            cp, cq = small_codes[p], small_codes[q]
            cpq = _code_digits(compose(p, q).word)
            ok = all(cpq[i] <= cq[i] + cp[q.word[i] - 1] for i in range(pair_n))
            r.record(ok, sigma=p, tau=q)

    def inverse_identity(r: PropertyResult) -> None:
        for p, c in zip(perms, codes):
            ci = _code_digits(inverse(p).word)
            ok = all(i + c[i - 1] == p.word[i - 1] + ci[p.word[i - 1] - 1] for i in range(1, n + 1))
            r.record(ok, sigma=p)

    def inverse_code_formula(r: PropertyResult) -> None:
        for p in perms:
            got = inverse_code(p)
            expected = lehmer_code(inverse(p))
            r.record(got == expected, sigma=p, got=got, expected=expected)

    def transposition_codes(r: PropertyResult) -> None:
        for s in range(1, n):
            c = _code_digits(adjacent_transposition(n, s).word)
            r.record(all(c[i - 1] == (1 if i == s else 0) for i in range(1, n + 1)), s=s, code=list(c))

    def transposition_update(r: PropertyResult) -> None:
        for p in perms:
            code = lehmer_code(p)
            for s in range(1, n):
                got = code_after_transposition(code, p, s)
                expected = lehmer_code(compose(p, adjacent_transposition(n, s)))
                r.record(got == expected, sigma=p, s=s, got=got, expected=expected)

    _run(report, "value_bound", f"S_{n}", value_bound)
    _run(report, "composition", f"S_{pair_n} x S_{pair_n}", composition)
    _run(report, "inverse_identity", f"S_{n}", inverse_identity)
    _run(report, "inverse_code", f"S_{n}", inverse_code_formula)
    _run(report, "transposition_code", f"S_{n}", transposition_codes)
    _run(report, "transposition_update", f"S_{n}, all s", transposition_update)
    return report


# --- distribution ---------------------------------------------------------------

DISTRIBUTION_MAX_M = 256


def verify_distribution(M: int) -> VerificationReport:
    """Recursion vs definition vs permutation count for ``m <= M``, the k-support
    lemma, and both directions of the decomposition/permutation bijection.
    """
    if not 1 <= M <= DISTRIBUTION_MAX_M:
        raise ScopeError(f"distribution suite supports 1 <= M <= {DISTRIBUTION_MAX_M}, got {M}")
    report = VerificationReport("distribution", f"M={M}")
    session = RecursionSession()
    sweep_n = oracle_degree(M)

    def recursion_vs_definition(r: PropertyResult) -> None:
        for m in range(1, M + 1):
            top = m.bit_length() - 1
            for k in range(0, top + 4):
                got, expected = session.s_k(m, k), s_k_bruteforce(m, k)
                r.record(got == expected, m=m, k=k, recursion=got, definition=expected)

    def support(r: PropertyResult) -> None:
        for m in range(1, M + 1):
            top = m.bit_length() - 1
            for k in range(0, top + 4):
                if k not in (top, top - 1):
                    v = s_k_bruteforce(m, k)
                    r.record(v == 0, m=m, k=k, count=v)

    def total_vs_permutations(r: PropertyResult) -> None:
        hist = norm_histogram(sweep_n)
        for m in range(1, M + 1):
            got, expected = session.s_total(m), hist[m]
            r.record(got == expected, m=m, recursion=got, permutations=expected)

    def decomposition_round_trip(r: PropertyResult) -> None:
        for m in range(1, M + 1):
            for dec in enumerate_decompositions(m):
                sigma = decomposition_to_permutation(dec)
                back = permutation_to_decomposition(sigma)
                value = norm(sigma)
                r.record(back == dec and value == m and _code_digits(sigma.word)[0] > 0,
                         decomposition=dec, permutation=sigma, norm=value)

    _run(report, "recursion_vs_definition", f"m<={M}, k<=top+3", recursion_vs_definition)
    _run(report, "k_support", f"m<={M}, k<=top+3", support)
    _run(report, "total_vs_permutations", f"m<={M}, one sweep of S_{sweep_n}", total_vs_permutations)
    _run(report, "decomposition_round_trip", f"values<={M}", decomposition_round_trip)
    return report


def check_permutation_round_trip(n: int) -> PropertyResult:
    """perm -> decomposition -> perm over every sigma in S_n with c_1 > 0."""
    result = PropertyResult("permutation_round_trip", f"S_{n}, c_1>0")
    t0 = time.perf_counter()
    for p in all_permutations(n):
        if p.word[0] == 1:  # c_1 = 0 exactly when sigma(1) = 1
            continue
        dec = permutation_to_decomposition(p)
        back = decomposition_to_permutation(dec)
        result.record(back == p and dec.value == norm(p), sigma=p, decomposition=dec)
    result.millis = (time.perf_counter() - t0) * 1000
    return result


SUITES: dict[str, tuple[Callable[[int], VerificationReport], str]] = {
    "norm": (verify_norm_theorem, "n"),
    "lemmas": (verify_code_lemmas, "n"),
    "distribution": (verify_distribution, "M"),
}


def run_suite(name: str, scope: int) -> VerificationReport:
    try:
        fn, _ = SUITES[name]
    except KeyError:
        raise ScopeError(f"unknown suite {name!r}") from None
    return fn(scope)

