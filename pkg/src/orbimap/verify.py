"""Batch verification suites and micro-benchmarks.

Each suite returns a SuiteReport with the checked count and any failure
descriptions, so callers (CLI, service, tests) can render or assert on
the same data.  Suites cover: presentation relators normalizing to the
identity, agreement between the combing decision and the braid oracle,
the conjugation action table against the oracle, the strand embedding
self-check, normal-form congruence under products, and the exact
sequence maps.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .combing import apply_action, is_trivial, normal_form, push, forget, section
from .oracle import EmbeddingError, oracle_equal, oracle_is_trivial, validate_embedding
from .params import GroupParams, params
from .presentations import expand_word, full_presentation, pure_presentation
from .words import Word, free_reduce, pure_alphabet, random_word, word_to_text


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of one verification suite at one parameter tuple."""

    suite: str
    params: GroupParams
    checked: int
    failures: tuple[str, ...]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        mark = "pass" if self.ok else "FAIL"
        p = self.params
        head = f"[{mark}] {self.suite} n={p.n} L={p.L} N={p.N}"
        tail = f"checked={self.checked} ({self.seconds:.2f}s)"
        if self.ok:
            return f"{head} {tail}"
        return f"{head} {tail} failures={len(self.failures)}: {self.failures[0]}"


def check_relators(p: GroupParams, group: str = "both") -> SuiteReport:
    """Every presentation relator normalizes to the identity."""
    t0 = time.perf_counter()
    failures: list[str] = []
    checked = 0
    groups = ("pure", "full") if group == "both" else (group,)
    for name in groups:
        if name == "full" and p.n == 0:
            continue
        pres = pure_presentation(p) if name == "pure" else full_presentation(p)
        for tag, rel in pres.relators:
            checked += 1
            if not is_trivial(rel):
                failures.append(f"{name} [{tag}] {word_to_text(rel)}")
    return SuiteReport("relators", p, checked, tuple(failures), time.perf_counter() - t0)


def check_oracle_agreement(
    p: GroupParams, count: int = 200, max_len: int = 12, seed: int = 0
) -> SuiteReport:
    """Combing and the braid oracle give the same triviality verdicts."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures: list[str] = []
    for _ in range(count):
        w = random_word(p, rng.randrange(0, max_len + 1), rng)
        ours = is_trivial(w)
        theirs = oracle_is_trivial(w)
        if ours != theirs:
            failures.append(f"{word_to_text(w)}: combing={ours} oracle={theirs}")
    return SuiteReport("oracle-agreement", p, count, tuple(failures), time.perf_counter() - t0)


def check_action_table(p: GroupParams) -> SuiteReport:
    """Action-table outputs match true conjugation, and invert exactly."""
    t0 = time.perf_counter()
    failures: list[str] = []
    checked = 0
    letters = pure_alphabet(p)
    for k in range(2, p.n + 1):
        targets = pure_alphabet(p, level=k)
        conjugators = [g for g in letters if g.level < k]
        for g in conjugators:
            for sg in (g, g.inv()):
                for y in targets:
                    checked += 1
                    got = apply_action(sg, Word((y,), p), k)
                    want = Word((sg,), p) * Word((y,), p) * Word((sg.inv(),), p)
                    if not oracle_equal(expand_word(got), expand_word(want)):
                        failures.append(
                            f"{word_to_text(Word((sg,), p))} . {word_to_text(Word((y,), p))}"
                        )
                    back = apply_action(sg.inv(), got, k)
                    if back != Word((y,), p):
                        failures.append(
                            f"inverse: {word_to_text(Word((sg,), p))} on {word_to_text(Word((y,), p))}"
                        )
    return SuiteReport("action-table", p, checked, tuple(failures), time.perf_counter() - t0)


def check_embedding(p: GroupParams) -> SuiteReport:
    """The strand embedding preserves all relators and band identities."""
    t0 = time.perf_counter()
    try:
        report = validate_embedding(p)
        checked = report.relators_checked + report.bands_checked
        failures: tuple[str, ...] = ()
    except EmbeddingError as exc:
        checked = 0
        failures = tuple(exc.failures)
    return SuiteReport("embedding", p, checked, failures, time.perf_counter() - t0)


def check_congruence(
    p: GroupParams, count: int = 50, max_len: int = 8, seed: int = 0
) -> SuiteReport:
    """normal_form(u v) equals normal_form(nf(u) nf(v)) on representatives."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures: list[str] = []
    for _ in range(count):
        u = random_word(p, rng.randrange(0, max_len + 1), rng)
        v = random_word(p, rng.randrange(0, max_len + 1), rng)
        lhs = normal_form(u * v)
        rhs = normal_form(normal_form(u).to_word() * normal_form(v).to_word())
        if lhs != rhs:
            failures.append(f"{word_to_text(u)} | {word_to_text(v)}")
    return SuiteReport("congruence", p, count, tuple(failures), time.perf_counter() - t0)


def check_exact_sequence(
    p: GroupParams, count: int = 100, max_len: int = 8, seed: int = 0
) -> SuiteReport:
    """push lands in the kernel of forget; forget undoes section."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures: list[str] = []
    checked = 0
    if p.n >= 1:
        for _ in range(count):
            checked += 1
            w = random_word(p, rng.randrange(0, max_len + 1), rng, alphabet="level")
            if not forget(push(w)).is_empty:
                failures.append(f"forget(push({word_to_text(w)})) nonempty")
    down = p.forget_marked() if p.n >= 1 else p
    for _ in range(count):
        checked += 1
        x = random_word(down, rng.randrange(0, max_len + 1), rng, alphabet="pure")
        if forget(section(x)) != free_reduce(x):
            failures.append(f"forget(section({word_to_text(x)}))")
    return SuiteReport("exact-sequence", p, checked, tuple(failures), time.perf_counter() - t0)


_SUITES = {
    "relators": lambda p, count, seed: check_relators(p),
    "oracle-agreement": check_oracle_agreement,
    "action-table": lambda p, count, seed: check_action_table(p),
    "embedding": lambda p, count, seed: check_embedding(p),
    "congruence": lambda p, count, seed: check_congruence(p, count=count, seed=seed),
    "exact-sequence": lambda p, count, seed: check_exact_sequence(p, count=count, seed=seed),
}


def suite_names() -> list[str]:
    return list(_SUITES)


def run_suite(name: str, p: GroupParams, count: int = 200, seed: int = 0) -> SuiteReport:
    """Run one named suite at one parameter tuple."""
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}, expected one of {', '.join(_SUITES)}")
    if name == "oracle-agreement":
        return check_oracle_agreement(p, count=count, seed=seed)
    return fn(p, count, seed)


def grid_params(max_n: int = 4, max_L: int = 2, max_N: int = 2) -> list[GroupParams]:
    """All parameter tuples with n, L, N up to the given bounds.

    Cone orders cycle through 2, 3 so both even and odd torsion appear;
    tuples with nothing to act on (n + L + N < 2) are skipped.
    """
    out: list[GroupParams] = []
    for n in range(0, max_n + 1):
        for L in range(0, max_L + 1):
            for N in range(0, max_N + 1):
                if n + L + N < 2:
                    continue
                m = tuple(2 + (i % 2) for i in range(N))
                out.append(params(n, L, N, m if N else None))
    return out


def run_grid(
    suites: list[str] | None = None,
    max_n: int = 4,
    max_L: int = 2,
    max_N: int = 2,
    count: int = 100,
    seed: int = 0,
) -> list[SuiteReport]:
    """Run the named suites over the whole parameter grid."""
    names = suites or ["relators", "embedding", "oracle-agreement"]
    reports: list[SuiteReport] = []
    for p in grid_params(max_n, max_L, max_N):
        for name in names:
            reports.append(run_suite(name, p, count=count, seed=seed))
    return reports


@dataclass(frozen=True)
class BenchReport:
    """Normal-form timing over random words at one parameter tuple."""

    params: GroupParams
    count: int
    length: int
    total_seconds: float
    mean_ms: float
    max_ms: float
    blowups: int

    def line(self) -> str:
        p = self.params
        return (
            f"normal_form n={p.n} L={p.L} N={p.N} words={self.count} len={self.length}: "
            f"mean {self.mean_ms:.2f}ms max {self.max_ms:.2f}ms "
            f"total {self.total_seconds:.2f}s blowups={self.blowups}"
        )


def bench_normal_form(
    p: GroupParams, count: int = 50, length: int = 40, seed: int = 0
) -> BenchReport:
    """Time normal_form on random mixed words; blowups count, not fail."""
    from .combing import BlowupError

    rng = random.Random(seed)
    words = [random_word(p, length, rng) for _ in range(count)]
    times: list[float] = []
    blowups = 0
    t0 = time.perf_counter()
    for w in words:
        t1 = time.perf_counter()
        try:
            normal_form(w)
        except BlowupError:
            blowups += 1
        times.append(time.perf_counter() - t1)
    total = time.perf_counter() - t0
    mean_ms = 1000 * sum(times) / len(times) if times else 0.0
    max_ms = 1000 * max(times) if times else 0.0
    return BenchReport(p, count, length, total, mean_ms, max_ms, blowups)
