"""Letters, words and permutations for mapping class groups of marked disks.

Generators come in two alphabets:

  mixed  H1 .. H(n-1)   half-twists swapping adjacent marked points
         T1 .. TL       point-pushes of marked point 1 around a puncture
         U1 .. UN       point-pushes of marked point 1 around a cone point
  pure   A(j,i) 1<=i<j<=n   band generators (pure braid twists)
         B(k,l) 1<=k<=n     marked point k pushed around puncture l
         C(k,v) 1<=k<=n     marked point k pushed around cone point v

A Word stores a run-length encoded sequence of letters: equal adjacent
letters are represented once with an exponent.  Words are not forced to be
reduced; free_reduce and the parser produce reduced words.

Text grammar (whitespace separated): `H3 T2 U1 A(3,1) B(2,1)^-2 C(2,3)`.
Indices are 1-based decimals with no leading zeros; `^1` may be omitted.
"""

from __future__ import annotations

import dataclasses
import random
import re
from typing import Iterable, Sequence, TypeVar

from .params import GroupParams, OrbimapError

MIXED_KINDS = ("H", "T", "U")
PURE_KINDS = ("A", "B", "C")


class ParseError(OrbimapError):
    """Malformed word text; carries the 1-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


class LetterRangeError(OrbimapError):
    """Letter indices outside the bounds allowed by the parameters."""


class AlphabetError(OrbimapError):
    """Operation applied to a word over the wrong alphabet."""


@dataclasses.dataclass(frozen=True, slots=True)
class Letter:
    kind: str  # one of H T U A B C
    a: int  # H/T/U index, or first (level) index of A/B/C
    b: int  # second index of A/B/C, 0 for H/T/U
    exp: int  # nonzero exponent

    def key(self) -> tuple[str, int, int]:
        return (self.kind, self.a, self.b)

    def inv(self) -> "Letter":
        return Letter(self.kind, self.a, self.b, -self.exp)

    def with_exp(self, exp: int) -> "Letter":
        return Letter(self.kind, self.a, self.b, exp)

    @property
    def level(self) -> int:
        """Level of a pure letter: the marked point it is based at."""
        if self.kind not in PURE_KINDS:
            raise AlphabetError(f"level undefined for mixed letter {letter_to_text(self)}")
        return self.a

    def __str__(self) -> str:
        return letter_to_text(self)


def make_letter(kind: str, a: int, b: int = 0, exp: int = 1, *, params: GroupParams) -> Letter:
    """Construct a letter, enforcing the index bounds of `params`."""
    if exp == 0:
        raise LetterRangeError(f"zero exponent on {kind}")
    n, L, N = params.n, params.L, params.N
    if kind == "H":
        if not 1 <= a <= n - 1:
            raise LetterRangeError(f"H{a} out of range 1..{n - 1}")
    elif kind == "T":
        if not 1 <= a <= L:
            raise LetterRangeError(f"T{a} out of range 1..{L}")
        if n < 1:
            raise LetterRangeError("T letters need a marked point (n >= 1)")
    elif kind == "U":
        if not 1 <= a <= N:
            raise LetterRangeError(f"U{a} out of range 1..{N}")
        if n < 1:
            raise LetterRangeError("U letters need a marked point (n >= 1)")
    elif kind == "A":
        if not (1 <= b < a <= n):
            raise LetterRangeError(f"A({a},{b}) needs 1 <= i < j <= n={n}")
    elif kind == "B":
        if not (1 <= a <= n and 1 <= b <= L):
            raise LetterRangeError(f"B({a},{b}) out of range (n={n}, L={L})")
    elif kind == "C":
        if not (1 <= a <= n and 1 <= b <= N):
            raise LetterRangeError(f"C({a},{b}) out of range (n={n}, N={N})")
    else:
        raise LetterRangeError(f"unknown letter kind {kind!r}")
    if kind in MIXED_KINDS and b != 0:
        raise LetterRangeError(f"{kind} letters take a single index")
    return Letter(kind, a, b, exp)


K = TypeVar("K")


def reduce_runs(runs: Iterable[tuple[K, int]]) -> list[tuple[K, int]]:
    """Merge a stream of (key, exponent) runs, cancelling to a fixpoint.

    Single shared reducer for words over any alphabet: adjacent runs with
    equal keys merge; zero exponents drop, which can cascade new merges.
    """
    out: list[tuple[K, int]] = []
    for key, exp in runs:
        while True:
            if exp == 0:
                break
            if out and out[-1][0] == key:
                exp += out.pop()[1]
                continue
            out.append((key, exp))
            break
    return out


@dataclasses.dataclass(frozen=True)
class Word:
    """A word in the generators, tied to its surface parameters."""

    letters: tuple[Letter, ...]
    params: GroupParams

    def __mul__(self, other: "Word") -> "Word":
        if other.params != self.params:
            raise OrbimapError("cannot multiply words with different parameters")
        return free_reduce(Word(self.letters + other.letters, self.params))

    def inverse(self) -> "Word":
        return Word(tuple(let.inv() for let in reversed(self.letters)), self.params)

    def conjugate_by(self, g: "Word") -> "Word":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def length(self) -> int:
        """Total letter count with exponent multiplicity."""
        return sum(abs(let.exp) for let in self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def kinds(self) -> set[str]:
        return {let.kind for let in self.letters}

    def is_pure_alphabet(self) -> bool:
        return all(let.kind in PURE_KINDS for let in self.letters)

    def is_mixed_alphabet(self) -> bool:
        return all(let.kind in MIXED_KINDS for let in self.letters)

    def __str__(self) -> str:
        return word_to_text(self)


def empty_word(params: GroupParams) -> Word:
    return Word((), params)


def word_from_letters(letters: Sequence[Letter], params: GroupParams) -> Word:
    """Validated word constructor (bounds-checks every letter)."""
    for let in letters:
        make_letter(let.kind, let.a, let.b, let.exp, params=params)
    return Word(tuple(letters), params)


def free_reduce(w: Word) -> Word:
    """Freely reduced form: adjacent equal letters merged, zeros dropped."""
    runs = reduce_runs((let.key(), let.exp) for let in w.letters)
    return Word(tuple(Letter(k[0], k[1], k[2], e) for k, e in runs), w.params)


def letter_to_text(let: Letter) -> str:
    if let.kind in MIXED_KINDS:
        body = f"{let.kind}{let.a}"
    else:
        body = f"{let.kind}({let.a},{let.b})"
    return body if let.exp == 1 else f"{body}^{let.exp}"


def word_to_text(w: Word) -> str:
    return " ".join(letter_to_text(let) for let in w.letters)


_TOKEN_RE = re.compile(
    r"(?:(?P<mk>[HTU])(?P<mi>[1-9][0-9]*)"
    r"|(?P<pk>[ABC])\((?P<pa>[1-9][0-9]*),(?P<pb>[1-9][0-9]*)\))"
    r"(?:\^(?P<exp>0|-?[1-9][0-9]*))?"
)


def parse_word(text: str, params: GroupParams) -> Word:
    """Parse word text; the result is freely reduced.

    Raises ParseError (with 1-based position) on malformed tokens or
    letters out of range for `params`.
    """
    letters: list[tuple[str, int, int, int]] = []
    for tok in re.finditer(r"\S+", text):
        pos = tok.start() + 1
        m = _TOKEN_RE.fullmatch(tok.group())
        if m is None:
            raise ParseError(f"bad letter {tok.group()!r}", pos)
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if m.group("mk") is not None:
            kind, a, b = m.group("mk"), int(m.group("mi")), 0
        else:
            kind, a, b = m.group("pk"), int(m.group("pa")), int(m.group("pb"))
        if exp == 0:
            continue
        try:
            make_letter(kind, a, b, exp, params=params)
        except LetterRangeError as err:
            raise ParseError(f"{tok.group()!r}: {err}", pos) from err
        letters.append((kind, a, b, exp))
    runs = reduce_runs(((k, a, b), e) for k, a, b, e in letters)
    return Word(tuple(Letter(k[0], k[1], k[2], e) for k, e in runs), params)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; images[i-1] = sigma(i).  sigma*tau applies tau first."""

    images: tuple[int, ...]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, j: int) -> "Permutation":
        """The adjacent transposition (j, j+1) in S_n."""
        imgs = list(range(1, n + 1))
        imgs[j - 1], imgs[j] = imgs[j], imgs[j - 1]
        return Permutation(tuple(imgs))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def inversions(self) -> int:
        """Coxeter length: number of pairs i<j with sigma(i)>sigma(j)."""
        return sum(
            1
            for i in range(len(self.images))
            for j in range(i + 1, len(self.images))
            if self.images[i] > self.images[j]
        )

    def cycles_text(self) -> str:
        """Cycle notation with fixed points omitted, `id` for the identity."""
        seen: set[int] = set()
        parts: list[str] = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) if parts else "id"

    def __str__(self) -> str:
        return self.cycles_text()


def perm_image(w: Word) -> Permutation:
    """Induced permutation of the n marked points (mixed-alphabet words only).

    H(j) maps to the transposition (j, j+1); T and U letters map to the
    identity.  Pure letters are rejected: their permutation is trivially
    the identity, and asking for it is almost always a logic error.
    """
    n = w.params.n
    imgs = list(range(1, n + 1))
    for let in w.letters:
        if let.kind in PURE_KINDS:
            raise AlphabetError(f"perm_image rejects pure letter {letter_to_text(let)}")
        if let.kind == "H" and let.exp % 2 != 0:
            j = let.a
            imgs[j - 1], imgs[j] = imgs[j], imgs[j - 1]
    return Permutation(tuple(imgs))


def mixed_alphabet(params: GroupParams) -> list[Letter]:
    """All mixed generators (exponent +1) available at these parameters."""
    gens: list[Letter] = []
    gens += [Letter("H", j, 0, 1) for j in range(1, params.n)]
    if params.n >= 1:
        gens += [Letter("T", lam, 0, 1) for lam in range(1, params.L + 1)]
        gens += [Letter("U", nu, 0, 1) for nu in range(1, params.N + 1)]
    return gens


def pure_alphabet(params: GroupParams, level: int | None = None) -> list[Letter]:
    """All pure generators, optionally restricted to one level."""
    levels = range(1, params.n + 1) if level is None else (level,)
    gens: list[Letter] = []
    for k in levels:
        gens += [Letter("A", k, i, 1) for i in range(1, k)]
        gens += [Letter("B", k, lam, 1) for lam in range(1, params.L + 1)]
        gens += [Letter("C", k, nu, 1) for nu in range(1, params.N + 1)]
    return gens


def random_word(
    params: GroupParams,
    length: int,
    rng: random.Random | int | None = None,
    alphabet: str = "mixed",
) -> Word:
    """Uniform random word of `length` letters (exponents +-1), unreduced.

    alphabet: "mixed" (H/T/U), "pure" (A/B/C over all levels), or
    "level" (A/B/C based at marked point n only).
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if alphabet == "mixed":
        gens = mixed_alphabet(params)
    elif alphabet == "pure":
        gens = pure_alphabet(params)
    elif alphabet == "level":
        gens = pure_alphabet(params, level=params.n) if params.n >= 1 else []
    else:
        raise OrbimapError(f"unknown alphabet {alphabet!r}")
    if not gens:
        return empty_word(params)
    letters = tuple(
        rng.choice(gens).with_exp(rng.choice((1, -1))) for _ in range(length)
    )
    return Word(letters, params)
