"""Combing normal forms and the word problem.

The pure subgroup is an iterated semidirect product of free groups: level
k contributes free generators A(k,i), B(k,l), C(k,v) (marked point k
moving around point i, puncture l, cone point v).  Conjugating a level-k
generator by a lower-level generator lands back in level k; the closed
form of that action is the action table below.  Every table entry is a
sandwich

    g y^e g^-1  = pre . y'^e . pre^-1

where y' is again a single level-k generator (for lower-level conjugators
y' = y; H-conjugation may rename the generator).

comb sorts a pure word into one freely reduced syllable per level, top
level first, by a left-to-right scan: letters of the current level are
conjugated past the lower-level tail, then the tail is combed
recursively.  rewrite_pure converts a permutation-trivial mixed word to
the pure alphabet by scanning with a permutation accumulator and emitting
conjugated band generators at descents.  normal_form splits any mixed
word into a pure part and a symmetric-group coset representative,

    w  =  pure_part . lift(perm_image(w)).

Intermediate words can genuinely explode (the action is exponential in
the worst case); a per-word length cap (ORBIMAP_MAX_SYLLABLE, default
10^6) and a letter-operation budget (ORBIMAP_MAX_OPS, default 10^7) turn
runaway growth into a typed BlowupError instead of a hang.
"""

from __future__ import annotations

import dataclasses
import functools
import os

from .params import GroupParams, OrbimapError
from .presentations import expand_word
from .words import (
    AlphabetError,
    Letter,
    Permutation,
    Word,
    empty_word,
    free_reduce,
    letter_to_text,
    perm_image,
    reduce_runs,
    word_to_text,
)

DEFAULT_MAX_SYLLABLE = 10**6
DEFAULT_MAX_OPS = 10**7

LetterKey = tuple[str, int, int]  # (kind, a, b)
Quad = tuple[str, int, int, int]  # (kind, a, b, exp)


class BlowupError(OrbimapError):
    """Intermediate result exceeded the length cap or the work budget."""

    def __init__(self, level: int, size: int, cap: int, reason: str = "length"):
        if reason == "length":
            msg = f"syllable blowup at level {level}: {size} letters exceeds cap {cap}"
        else:
            msg = f"work budget exhausted at level {level}: {size} letter ops exceed {cap}"
        super().__init__(msg)
        self.level = level
        self.size = size
        self.cap = cap
        self.reason = reason


class NonPureError(OrbimapError):
    """Word is not in the pure subgroup; carries the offending permutation."""

    def __init__(self, perm: Permutation):
        super().__init__(f"word is not pure: it permutes the marked points as {perm}")
        self.perm = perm


class CertificationError(OrbimapError):
    """Oracle disagreed with a rewrite result (indicates an internal bug)."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _certify_default() -> bool:
    return os.environ.get("ORBIMAP_CERTIFY", "") not in ("", "0", "false")


# ---------------------------------------------------------------------------
# Action table


def _quads_inv(quads: tuple[Quad, ...]) -> tuple[Quad, ...]:
    return tuple((k, a, b, -e) for k, a, b, e in reversed(quads))


@functools.lru_cache(maxsize=None)
def _action_pre(
    gk: str, gs: int, gb: int, sign: int, tk: str, k: int, tb: int
) -> tuple[Quad, ...] | None:
    """Sandwich prefix for conjugating target (tk, k, tb) by g^sign.

    The conjugator g = (gk, gs, gb) sits at level gs < k.  Returns None
    when the two commute; otherwise g y g^-1 = pre . y . pre^-1.
    """
    s, r = gs, gb
    a_s: Quad = ("A", k, s, 1)

    def quads(*qs: Quad) -> tuple[Quad, ...]:
        return qs

    if gk == "A":
        if tk != "A":
            return None
        j = tb
        a_r: Quad = ("A", k, r, 1)
        if j == r:
            if sign > 0:
                return quads(("A", k, r, -1), ("A", k, s, -1))
            return quads(a_s)
        if j == s:
            if sign > 0:
                return quads(("A", k, r, -1))
            return quads(a_s, a_r)
        if r < j < s:
            if sign > 0:
                return quads(("A", k, r, -1), ("A", k, s, -1), a_r, a_s)
            return quads(a_s, a_r, ("A", k, s, -1), ("A", k, r, -1))
        return None

    core: Quad = ("B" if gk == "B" else "C", k, gb, 1)
    core_inv: Quad = (core[0], k, gb, -1)
    # conjugate of the same-kind pair (interleaved bands based at s)
    wrap_pos = quads(core_inv, ("A", k, s, -1), core, a_s)
    wrap_neg = quads(a_s, core, ("A", k, s, -1), core_inv)

    if tk == "A":
        j = tb
        if j == s:
            if sign > 0:
                return quads(core_inv)
            return quads(a_s, core)
        if j < s:
            return wrap_pos if sign > 0 else wrap_neg
        return None

    if gk == "B":
        if tk != "B":
            return None  # B-conjugation fixes every C
        lam = tb
        if gb == lam:
            if sign > 0:
                return quads(core_inv, ("A", k, s, -1))
            return quads(a_s)
        if gb > lam:
            return wrap_pos if sign > 0 else wrap_neg
        return None

    # gk == "C"
    if tk == "B":
        # C-conjugation moves every B: the cone band is inside the loop.
        return wrap_pos if sign > 0 else wrap_neg
    nu = tb
    if gb == nu:
        if sign > 0:
            return quads(core_inv, ("A", k, s, -1))
        return quads(a_s)
    if gb > nu:
        return wrap_pos if sign > 0 else wrap_neg
    return None


@dataclasses.dataclass(frozen=True)
class ActionTable:
    """Conjugation action of lower-level generators on level-k generators."""

    params: GroupParams

    def pre(self, g: Letter, target: Letter) -> Word | None:
        """Sandwich prefix word, or None when g and target commute."""
        self._check(g, target)
        quads = _action_pre(g.kind, g.a, g.b, 1 if g.exp > 0 else -1, target.kind, target.a, target.b)
        if quads is None:
            return None
        return Word(tuple(Letter(k, a, b, e) for k, a, b, e in quads), self.params)

    def apply(self, g: Letter, target: Letter) -> Word:
        """g target g^-1 as a level-(target.level) word."""
        pre = self.pre(g, target.with_exp(1))
        if pre is None:
            return Word((target,), self.params)
        mid = Word((target,), self.params)
        return pre * mid * pre.inverse()

    def _check(self, g: Letter, target: Letter) -> None:
        if g.kind not in ("A", "B", "C") or target.kind not in ("A", "B", "C"):
            raise AlphabetError("action table is defined on pure letters only")
        if abs(g.exp) != 1:
            raise AlphabetError(f"conjugator must have exponent +-1, got {letter_to_text(g)}")
        if g.level >= target.level:
            raise AlphabetError(
                f"conjugator {letter_to_text(g)} must sit strictly below level {target.level}"
            )

    def domain(self, k: int) -> list[tuple[Letter, Letter]]:
        """All (conjugator, level-k target) pairs, conjugators at both signs."""
        from .words import pure_alphabet

        pairs = []
        lowers = [g for g in pure_alphabet(self.params) if g.level < k]
        targets = pure_alphabet(self.params, level=k)
        for g in lowers:
            for t in targets:
                pairs.append((g, t))
                pairs.append((g.inv(), t))
        return pairs


def apply_action(g: Letter, w: Word, k: int) -> Word:
    """Conjugate a level-k word by a single lower-level letter (exp +-1)."""
    table = ActionTable(w.params)
    out: list[tuple[LetterKey, int]] = []
    for let in w.letters:
        if let.kind not in ("A", "B", "C") or let.a != k:
            raise AlphabetError(f"apply_action expects level-{k} letters, got {letter_to_text(let)}")
        table._check(g, let)
        quads = _action_pre(g.kind, g.a, g.b, 1 if g.exp > 0 else -1, let.kind, let.a, let.b)
        if quads is None:
            out.append(((let.kind, let.a, let.b), let.exp))
        else:
            out.extend(((k0, a0, b0), e0) for k0, a0, b0, e0 in quads)
            out.append(((let.kind, let.a, let.b), let.exp))
            out.extend(((k0, a0, b0), e0) for k0, a0, b0, e0 in _quads_inv(quads))
    runs = reduce_runs(out)
    return Word(tuple(Letter(k0[0], k0[1], k0[2], e) for k0, e in runs), w.params)


def apply_action_word(v: Word, x: Word, k: int) -> Word:
    """Conjugate a level-k word by a lower-level word: v x v^-1."""
    out = x
    for let in reversed(v.letters):
        sign = 1 if let.exp > 0 else -1
        for _ in range(abs(let.exp)):
            out = apply_action(let.with_exp(sign), out, k)
    return out


# ---------------------------------------------------------------------------
# Normal forms


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """One freely reduced syllable per level (top level first) and a coset."""

    syllables: tuple[Word, ...]  # index 0 = level n, ..., last = level 1
    coset: Permutation
    params: GroupParams

    @property
    def is_trivial(self) -> bool:
        return all(s.is_empty for s in self.syllables) and self.coset.is_identity

    def syllable(self, k: int) -> Word:
        """Syllable at level k (1-based)."""
        return self.syllables[self.params.n - k]

    def pure_part(self) -> Word:
        out = empty_word(self.params)
        for s in self.syllables:
            out = out * s
        return out

    def to_word(self) -> Word:
        """Mixed-alphabet representative: expanded syllables times the lift."""
        return expand_word(self.pure_part()) * lift(self.coset, self.params)

    def __str__(self) -> str:
        n = self.params.n
        parts = [
            f"[k={n - i}: {word_to_text(s)}]" for i, s in enumerate(self.syllables)
        ]
        parts.append(f"| coset: {self.coset.cycles_text()}")
        return " ".join(parts)


class _RunStack:
    """Reduced run accumulator with exact letter count and an op budget."""

    __slots__ = ("runs", "letters", "budget")

    def __init__(self, budget: "_Budget"):
        self.runs: list[tuple] = []
        self.letters = 0
        self.budget = budget

    def push(self, key, exp: int) -> None:
        if not exp:
            return
        self.budget.spend(1)
        runs = self.runs
        if runs and runs[-1][0] == key:
            _, e0 = runs[-1]
            e = e0 + exp
            self.letters += abs(e) - abs(e0)
            if e:
                runs[-1] = (key, e)
            else:
                runs.pop()
        else:
            runs.append((key, exp))
            self.letters += abs(exp)

    def extend(self, runs) -> None:
        if not runs:
            return
        self.budget.spend(len(runs))
        rs = self.runs
        letters = self.letters
        for key, exp in runs:
            if rs and rs[-1][0] == key:
                e0 = rs[-1][1]
                e = e0 + exp
                letters += abs(e) - abs(e0)
                if e:
                    rs[-1] = (key, e)
                else:
                    rs.pop()
            else:
                rs.append((key, exp))
                letters += abs(exp)
        self.letters = letters

    def extend_inv(self, runs) -> None:
        if not runs:
            return
        self.budget.spend(len(runs))
        rs = self.runs
        letters = self.letters
        for key, e0m in reversed(runs):
            exp = -e0m
            if rs and rs[-1][0] == key:
                e0 = rs[-1][1]
                e = e0 + exp
                letters += abs(e) - abs(e0)
                if e:
                    rs[-1] = (key, e)
                else:
                    rs.pop()
            else:
                rs.append((key, exp))
                letters += abs(exp)
        self.letters = letters


class _Budget:
    __slots__ = ("used", "limit", "level")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit
        self.level = 0

    def spend(self, k: int) -> None:
        self.used += k
        if self.used > self.limit:
            raise BlowupError(self.level, self.used, self.limit, reason="work")


def _resolve_caps(max_syllable: int | None, max_ops: int | None) -> tuple[int, int]:
    cap = max_syllable if max_syllable is not None else _env_int("ORBIMAP_MAX_SYLLABLE", DEFAULT_MAX_SYLLABLE)
    ops = max_ops if max_ops is not None else _env_int("ORBIMAP_MAX_OPS", DEFAULT_MAX_OPS)
    return cap, ops


@functools.lru_cache(maxsize=None)
def _gid_rules(
    gk: str, gs: int, gb: int, sign: int, k: int, L: int, N: int
) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Action of one conjugator on level k in generator-id space.

    Level-k generators are numbered 0..k-2 for A(k,1..k-1), then L B's,
    then N C's.  Yields (target gid, sandwich prefix as (gid, sign) runs)
    for the targets that actually move.
    """

    def gid(kind: str, b: int) -> int:
        if kind == "A":
            return b - 1
        if kind == "B":
            return (k - 1) + (b - 1)
        return (k - 1) + L + (b - 1)

    out = []
    targets = [("A", j) for j in range(1, k)]
    targets += [("B", lam) for lam in range(1, L + 1)]
    targets += [("C", nu) for nu in range(1, N + 1)]
    for tk, tb in targets:
        quads = _action_pre(gk, gs, gb, sign, tk, k, tb)
        if quads is not None:
            pre = tuple((gid(k0, b0), e0) for k0, a0, b0, e0 in quads)
            out.append((gid(tk, tb), pre))
    return tuple(out)


def comb(
    w: Word,
    *,
    max_syllable: int | None = None,
    max_ops: int | None = None,
) -> NormalForm:
    """Sort a pure word into per-level syllables (trivial coset).

    Scans left to right at each level k = n..2: a level-k letter x joins
    the syllable as (tail) x (tail)^-1 via the action table, where tail
    is the lower-level prefix seen so far; the tail itself is combed at
    the next level down.  Raises BlowupError when intermediates outgrow
    the caps.
    """
    if not w.is_pure_alphabet():
        bad = next(let for let in w.letters if let.kind not in ("A", "B", "C"))
        raise AlphabetError(f"comb expects a pure word, got letter {letter_to_text(bad)}")
    params = w.params
    n, L, N = params.n, params.L, params.N
    cap, ops = _resolve_caps(max_syllable, max_ops)
    budget = _Budget(ops)

    current: list[tuple[LetterKey, int]] = reduce_runs(
        (((let.kind, let.a, let.b), let.exp) for let in w.letters)
    )
    syllables: list[Word] = []
    for k in range(n, 1, -1):
        budget.level = k
        G = (k - 1) + L + N
        wraps: list[list[tuple[int, int]]] = [[] for _ in range(G)]
        u = _RunStack(budget)
        v_stack = _RunStack(budget)
        # Conjugator tracking is only needed up to the last level-k letter;
        # everything after it joins the lower-level tail untouched.
        last = -1
        for idx, (key, _) in enumerate(current):
            if key[1] == k:
                last = idx

        def gid_of(key: LetterKey) -> int:
            if key[0] == "A":
                return key[2] - 1
            if key[0] == "B":
                return (k - 1) + key[2] - 1
            return (k - 1) + L + key[2] - 1

        for idx, (key, e) in enumerate(current):
            if key[1] == k:
                t = gid_of(key)
                wrap = wraps[t]
                u.extend(wrap)
                u.push(t, e)
                u.extend_inv(wrap)
                if u.letters > cap:
                    raise BlowupError(k, u.letters, cap)
            else:
                v_stack.push(key, e)
                if idx > last:
                    continue
                sign = 1 if e > 0 else -1
                for _ in range(abs(e)):
                    rules = _gid_rules(key[0], key[1], key[2], sign, k, L, N)
                    if not rules:
                        continue
                    phi_cache: dict[tuple, list[tuple[int, int]]] = {}
                    updates: list[tuple[int, list[tuple[int, int]]]] = []
                    for t, pre in rules:
                        phi = phi_cache.get(pre)
                        if phi is None:
                            st = _RunStack(budget)
                            for p, sg in pre:
                                st.extend(wraps[p])
                                st.push(p, sg)
                                st.extend_inv(wraps[p])
                            phi = st.runs
                            phi_cache[pre] = phi
                        nw = _RunStack(budget)
                        nw.extend(phi)
                        nw.extend(wraps[t])
                        if nw.letters > cap:
                            raise BlowupError(k, nw.letters, cap)
                        updates.append((t, nw.runs))
                    for t, runs in updates:
                        wraps[t] = runs

        def unid(g: int) -> LetterKey:
            if g < k - 1:
                return ("A", k, g + 1)
            if g < k - 1 + L:
                return ("B", k, g - (k - 1) + 1)
            return ("C", k, g - (k - 1) - L + 1)

        syllables.append(
            Word(tuple(Letter(*unid(g), e) for g, e in u.runs), params)
        )
        current = v_stack.runs

    if n >= 1:
        syllables.append(
            Word(tuple(Letter(key[0], key[1], key[2], e) for key, e in current), params)
        )
    elif current:
        raise AlphabetError("nonempty pure word at n=0")
    return NormalForm(tuple(syllables), Permutation.identity(n), params)


# ---------------------------------------------------------------------------
# Mixed words: permutation lifts and the Schreier rewrite


def perm_to_positive_word(perm: Permutation) -> list[int]:
    """Reduced positive H-word for a permutation (length = inversions).

    Any two reduced words for the same permutation are braid-equivalent,
    so the group element they spell is well defined.
    """
    imgs = list(perm.images)
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(imgs) - 1):
            if imgs[i] > imgs[i + 1]:
                imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
                swaps.append(i + 1)
                changed = True
                break
    return list(reversed(swaps))


def lift(perm: Permutation, params: GroupParams) -> Word:
    """Positive H-word representing a marked-point permutation."""
    return Word(tuple(Letter("H", j, 0, 1) for j in perm_to_positive_word(perm)), params)


@functools.lru_cache(maxsize=None)
def _h_rule(hj: int, sign: int, tk: str, ta: int, tb: int) -> tuple[tuple[Quad, ...], LetterKey] | None:
    """Conjugation of a pure letter by H(hj)^sign: pre, renamed core.

    Returns None when they commute (core keeps its name); otherwise
    H^s y H^-s = pre . core . pre^-1 with core a single pure letter.
    """
    if tk == "A":
        j, i = ta, tb
        if hj == i - 1:
            if sign > 0:
                return ((), ("A", j, i - 1))
            return ((("A", j, i, 1),), ("A", j, i - 1))
        if hj == i:
            if i + 1 == j:
                return None  # the target is H(i)^2 itself
            if sign > 0:
                return ((("A", j, i, -1),), ("A", j, i + 1))
            return ((), ("A", j, i + 1))
        if hj == j - 1:
            if sign > 0:
                return ((), ("A", j - 1, i))
            return ((("A", j, j - 1, -1),), ("A", j - 1, i))
        if hj == j:
            if sign > 0:
                return ((("A", j + 1, j, 1),), ("A", j + 1, i))
            return ((), ("A", j + 1, i))
        return None
    # B and C ride along with their base point only
    j = ta
    if hj == j - 1:
        if sign > 0:
            return ((), (tk, j - 1, tb))
        return ((("A", j, j - 1, -1),), (tk, j - 1, tb))
    if hj == j:
        if sign > 0:
            return ((("A", j + 1, j, 1),), (tk, j + 1, tb))
        return ((), (tk, j + 1, tb))
    return None


def conjugate_by_h(hj: int, sign: int, runs: list[tuple[LetterKey, int]]) -> list[tuple[LetterKey, int]]:
    """Conjugate a pure word by H(hj)^sign using the renaming rules."""
    out: list[tuple[LetterKey, int]] = []
    for key, e in runs:
        rule = _h_rule(hj, sign, key[0], key[1], key[2])
        if rule is None:
            out.append((key, e))
        else:
            pre, core = rule
            out.extend(((k0, a0, b0), e0) for k0, a0, b0, e0 in pre)
            out.append((core, e))
            out.extend(((k0, a0, b0), e0) for k0, a0, b0, e0 in _quads_inv(pre))
    return reduce_runs(out)


def conjugate_by_positive(tau: list[int], runs: list[tuple[LetterKey, int]]) -> list[tuple[LetterKey, int]]:
    """tau . word . tau^-1 for a positive H-word tau (innermost last)."""
    for j in reversed(tau):
        runs = conjugate_by_h(j, 1, runs)
    return runs


def rewrite_pure(w: Word, *, certify: bool | None = None) -> Word:
    """Rewrite a permutation-trivial mixed word over the pure alphabet.

    Scans left to right keeping (P, sigma) with prefix = P . tau_sigma:
    an H letter either extends/shortens the permutation braid silently or
    emits a conjugated band generator A(j+1,j)^-+1; T/U letters emit
    conjugated B(1,.)/C(1,.).  Rejects words with nontrivial permutation.
    With certify on, the braid oracle checks w = P on every call.
    """
    if not w.is_mixed_alphabet():
        bad = next(let for let in w.letters if let.kind in ("A", "B", "C"))
        raise AlphabetError(f"rewrite_pure expects a mixed word, got letter {letter_to_text(bad)}")
    total = perm_image(w)
    if not total.is_identity:
        raise NonPureError(total)
    n = w.params.n
    imgs = list(range(1, n + 1))
    out: list[tuple[LetterKey, int]] = []

    def emit(quadruns: list[tuple[LetterKey, int]]) -> None:
        for key, e in quadruns:
            if out and out[-1][0] == key:
                s = out[-1][1] + e
                if s:
                    out[-1] = (key, s)
                else:
                    out.pop()
            else:
                out.append((key, e))

    for let in w.letters:
        if let.kind in ("T", "U"):
            core: LetterKey = ("B" if let.kind == "T" else "C", 1, let.a)
            tau = perm_to_positive_word(Permutation(tuple(imgs)))
            emit(conjugate_by_positive(tau, [(core, let.exp)]))
            continue
        j = let.a
        sign = 1 if let.exp > 0 else -1
        for _ in range(abs(let.exp)):
            ascending = imgs[j - 1] < imgs[j]
            if sign > 0:
                imgs[j - 1], imgs[j] = imgs[j], imgs[j - 1]
                if not ascending:
                    tau = perm_to_positive_word(Permutation(tuple(imgs)))
                    emit(conjugate_by_positive(tau, [(("A", j + 1, j), 1)]))
            else:
                if not ascending:
                    imgs[j - 1], imgs[j] = imgs[j], imgs[j - 1]
                else:
                    tau = perm_to_positive_word(Permutation(tuple(imgs)))
                    emit(conjugate_by_positive(tau, [(("A", j + 1, j), -1)]))
                    imgs[j - 1], imgs[j] = imgs[j], imgs[j - 1]
    result = Word(tuple(Letter(k[0], k[1], k[2], e) for k, e in out), w.params)
    if certify if certify is not None else _certify_default():
        from .oracle import oracle_is_trivial

        if not oracle_is_trivial(w * result.inverse()):
            raise CertificationError(
                f"rewrite_pure output disagrees with the oracle on {word_to_text(w)}"
            )
    return result


# ---------------------------------------------------------------------------
# Word problem and the exact-sequence maps


def normal_form(
    w: Word,
    *,
    max_syllable: int | None = None,
    max_ops: int | None = None,
    certify: bool | None = None,
) -> NormalForm:
    """Combing normal form of any word, pure or mixed alphabet.

    For mixed words, w = pure_part . lift(coset) with coset the induced
    permutation; the pure part is rewritten and combed.
    """
    if w.is_pure_alphabet():
        return comb(w, max_syllable=max_syllable, max_ops=max_ops)
    if not w.is_mixed_alphabet():
        raise AlphabetError("cannot mix pure and mixed letters in one word")
    coset = perm_image(w)
    pure_w = w * lift(coset, w.params).inverse()
    pure = rewrite_pure(pure_w, certify=certify)
    nf = comb(pure, max_syllable=max_syllable, max_ops=max_ops)
    return NormalForm(nf.syllables, coset, w.params)


def is_trivial(
    w: Word,
    *,
    max_syllable: int | None = None,
    max_ops: int | None = None,
    certify: bool | None = None,
) -> bool:
    """Word problem: does w represent the identity mapping class?"""
    if w.is_pure_alphabet():
        pure = w
    elif not w.is_mixed_alphabet():
        raise AlphabetError("cannot mix pure and mixed letters in one word")
    else:
        if not perm_image(w).is_identity:
            return False
        pure = rewrite_pure(w, certify=certify)
    # Combing conjugates every level-k letter within level k, so the exponent
    # sum of each generator is a syllable invariant: any nonzero sum certifies
    # a nonempty syllable without paying for the comb.
    totals: dict[tuple[str, int, int], int] = {}
    for let in pure.letters:
        key = let.key()
        totals[key] = totals.get(key, 0) + let.exp
    if any(totals.values()):
        return False
    return comb(pure, max_syllable=max_syllable, max_ops=max_ops).is_trivial


def trivial_nf(params: GroupParams) -> NormalForm:
    return NormalForm(
        tuple(empty_word(params) for _ in range(params.n)),
        Permutation.identity(params.n),
        params,
    )


def push(w: Word) -> Word:
    """Include a word of the level-n free group into the pure subgroup."""
    n = w.params.n
    for let in w.letters:
        if let.kind not in ("A", "B", "C") or let.a != n:
            raise AlphabetError(
                f"push expects level-{n} letters only, got {letter_to_text(let)}"
            )
    return free_reduce(w)


def forget(w: Word) -> Word:
    """Forget the last marked point: delete level-n letters, reduce at n-1."""
    params = w.params
    if params.n < 1:
        raise AlphabetError("forget needs at least one marked point")
    if not w.is_pure_alphabet():
        bad = next(let for let in w.letters if let.kind not in ("A", "B", "C"))
        raise AlphabetError(f"forget expects a pure word, got letter {letter_to_text(bad)}")
    smaller = params.forget_marked()
    kept = tuple(let for let in w.letters if let.a != params.n)
    return free_reduce(Word(kept, smaller))


def section(w: Word) -> Word:
    """Reinterpret a pure word at n marked points as one at n+1 (splitting)."""
    if not w.is_pure_alphabet():
        bad = next(let for let in w.letters if let.kind not in ("A", "B", "C"))
        raise AlphabetError(f"section expects a pure word, got letter {letter_to_text(bad)}")
    return Word(w.letters, w.params.add_marked())
