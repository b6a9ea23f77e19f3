"""Finite presentations of the mapping class groups and their pure subgroups.

Pure presentation: generators A(j,i), B(k,l), C(k,v); relators in four
families: (1) disjoint pairs commute, (2) nested pairs commute, (3) a
conjugated generator commutes across levels, (4) triple products agree
(each triple equality X=Y=Z is emitted as two relators X Y^-1 and Y Z^-1).

Full presentation (n >= 1): generators H1..H(n-1), T1..TL, U1..UN; braid
and far-commutation relations among the H's, commutation of T/U with
H2..H(n-1), and the level-one interaction relations.

Both presentations are independent of the cone orders m: exports contain
n, L, N only, and exporting at different m gives byte-identical output.

Every A/B/C letter abbreviates a mixed word:

    A(j,i) = H(j-1)^-1 ... H(i+1)^-1 H(i)^2 H(i+1) ... H(j-1)
    B(k,l) = H(k-1)^-1 ... H(1)^-1 T(l) H(1) ... H(k-1)
    C(k,v) = H(k-1)^-1 ... H(1)^-1 U(v) H(1) ... H(k-1)

A power expands the abbreviation once and raises the core letter.
"""

from __future__ import annotations

import dataclasses
import json

from .params import GroupParams, OrbimapError
from .words import (
    Letter,
    Word,
    empty_word,
    free_reduce,
    letter_to_text,
    make_letter,
    word_to_text,
)


class PresentationError(OrbimapError):
    """Presentation requested outside its domain (e.g. full at n=0)."""


@dataclasses.dataclass(frozen=True)
class Presentation:
    generators: tuple[Letter, ...]  # exponent-one letters
    relators: tuple[tuple[str, Word], ...]  # (family tag, relator word)
    params: GroupParams


def _w(params: GroupParams, *letters: tuple[str, int, int, int]) -> Word:
    return free_reduce(
        Word(tuple(Letter(k, a, b, e) for k, a, b, e in letters), params)
    )


def _commutator(x: Word, y: Word) -> Word:
    return x * y * x.inverse() * y.inverse()


def _A(j: int, i: int, e: int = 1) -> tuple[str, int, int, int]:
    return ("A", j, i, e)


def _B(k: int, lam: int, e: int = 1) -> tuple[str, int, int, int]:
    return ("B", k, lam, e)


def _C(k: int, nu: int, e: int = 1) -> tuple[str, int, int, int]:
    return ("C", k, nu, e)


def pure_generators(params: GroupParams) -> tuple[Letter, ...]:
    n, L, N = params.n, params.L, params.N
    gens = [make_letter("A", j, i, params=params) for j in range(2, n + 1) for i in range(1, j)]
    gens += [make_letter("B", k, lam, params=params) for k in range(1, n + 1) for lam in range(1, L + 1)]
    gens += [make_letter("C", k, nu, params=params) for k in range(1, n + 1) for nu in range(1, N + 1)]
    return tuple(gens)


def pure_presentation(params: GroupParams) -> Presentation:
    """Presentation of the pure subgroup (marked points fixed pointwise)."""
    n, L, N = params.n, params.L, params.N
    P = params
    rels: list[tuple[str, Word]] = []

    def comm(tag: str, x: Word, y: Word) -> None:
        rels.append((tag, _commutator(x, y)))

    # (1) disjoint supports commute: the lower band sits strictly left
    # of the A-band [k,l].
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for l in range(k + 1, n + 1):
                    comm("1a", _w(P, _A(j, i)), _w(P, _A(l, k)))
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            for l in range(k + 1, n + 1):
                for lam in range(1, L + 1):
                    comm("1b", _w(P, _B(j, lam)), _w(P, _A(l, k)))
                for nu in range(1, N + 1):
                    comm("1c", _w(P, _C(j, nu)), _w(P, _A(l, k)))

    # (2) nested supports commute.
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for l in range(k + 1, n + 1):
                    comm("2a", _w(P, _A(l, i)), _w(P, _A(k, j)))
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            for l in range(k + 1, n + 1):
                for lam in range(1, L + 1):
                    comm("2b", _w(P, _B(l, lam)), _w(P, _A(k, j)))
                for nu in range(1, N + 1):
                    comm("2d", _w(P, _C(l, nu)), _w(P, _A(k, j)))
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            for th in range(1, L + 1):
                for lam in range(th + 1, L + 1):
                    comm("2c", _w(P, _B(l, lam)), _w(P, _B(k, th)))
            for lam in range(1, L + 1):
                for nu in range(1, N + 1):
                    comm("2e", _w(P, _C(l, nu)), _w(P, _B(k, lam)))
            for mu in range(1, N + 1):
                for nu in range(mu + 1, N + 1):
                    comm("2f", _w(P, _C(l, nu)), _w(P, _C(k, mu)))

    # (3) a generator conjugated within its level commutes with the
    # matching generator one level down.
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for l in range(k + 1, n + 1):
                    comm("3a", _w(P, _A(l, k), _A(l, j), _A(l, k, -1)), _w(P, _A(k, i)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for lam in range(1, L + 1):
                    comm("3b", _w(P, _A(k, j), _A(k, i), _A(k, j, -1)), _w(P, _B(j, lam)))
                for nu in range(1, N + 1):
                    comm("3c", _w(P, _A(k, j), _A(k, i), _A(k, j, -1)), _w(P, _C(j, nu)))
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            for th in range(1, L + 1):
                for lam in range(th + 1, L + 1):
                    comm("3d", _w(P, _A(k, j), _B(k, th), _A(k, j, -1)), _w(P, _B(j, lam)))
            for lam in range(1, L + 1):
                for nu in range(1, N + 1):
                    comm("3e", _w(P, _A(k, j), _B(k, lam), _A(k, j, -1)), _w(P, _C(j, nu)))
            for mu in range(1, N + 1):
                for nu in range(mu + 1, N + 1):
                    comm("3f", _w(P, _A(k, j), _C(k, mu), _A(k, j, -1)), _w(P, _C(j, nu)))

    # (4) triple products agree; X=Y=Z becomes X Y^-1 and Y Z^-1.
    def triple(tag: str, x: Word, y: Word, z: Word) -> None:
        rels.append((f"{tag}.1", x * y.inverse()))
        rels.append((f"{tag}.2", y * z.inverse()))

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                triple(
                    "4a",
                    _w(P, _A(j, i), _A(k, j), _A(k, i)),
                    _w(P, _A(k, i), _A(j, i), _A(k, j)),
                    _w(P, _A(k, j), _A(k, i), _A(j, i)),
                )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for lam in range(1, L + 1):
                triple(
                    "4b",
                    _w(P, _A(j, i), _B(j, lam), _B(i, lam)),
                    _w(P, _B(i, lam), _A(j, i), _B(j, lam)),
                    _w(P, _B(j, lam), _B(i, lam), _A(j, i)),
                )
            for nu in range(1, N + 1):
                triple(
                    "4c",
                    _w(P, _A(j, i), _C(j, nu), _C(i, nu)),
                    _w(P, _C(i, nu), _A(j, i), _C(j, nu)),
                    _w(P, _C(j, nu), _C(i, nu), _A(j, i)),
                )

    return Presentation(pure_generators(params), tuple(rels), params)


def full_generators(params: GroupParams) -> tuple[Letter, ...]:
    n, L, N = params.n, params.L, params.N
    gens = [make_letter("H", j, params=params) for j in range(1, n)]
    gens += [make_letter("T", lam, params=params) for lam in range(1, L + 1)]
    gens += [make_letter("U", nu, params=params) for nu in range(1, N + 1)]
    return tuple(gens)


def full_presentation(params: GroupParams) -> Presentation:
    """Presentation of the whole group on the mixed generators (n >= 1)."""
    n, L, N = params.n, params.L, params.N
    if n < 1:
        raise PresentationError("full presentation needs at least one marked point")
    P = params
    rels: list[tuple[str, Word]] = []

    def _h(j: int, e: int = 1) -> tuple[str, int, int, int]:
        return ("H", j, 0, e)

    def _t(lam: int, e: int = 1) -> tuple[str, int, int, int]:
        return ("T", lam, 0, e)

    def _u(nu: int, e: int = 1) -> tuple[str, int, int, int]:
        return ("U", nu, 0, e)

    for i in range(1, n - 1):
        rels.append(
            ("1a", _w(P, _h(i), _h(i + 1), _h(i), _h(i + 1, -1), _h(i, -1), _h(i + 1, -1)))
        )
    for j in range(1, n - 1):
        for k in range(j + 2, n):
            rels.append(("1b", _commutator(_w(P, _h(j)), _w(P, _h(k)))))
    for j in range(2, n):
        for lam in range(1, L + 1):
            rels.append(("2a", _commutator(_w(P, _t(lam)), _w(P, _h(j)))))
        for nu in range(1, N + 1):
            rels.append(("2b", _commutator(_w(P, _u(nu)), _w(P, _h(j)))))
    if n >= 2:
        for lam in range(1, L + 1):
            rels.append(("3a", _commutator(_w(P, _h(1), _t(lam), _h(1)), _w(P, _t(lam)))))
        for nu in range(1, N + 1):
            rels.append(("3b", _commutator(_w(P, _h(1), _u(nu), _h(1)), _w(P, _u(nu)))))
        for th in range(1, L + 1):
            for lam in range(th + 1, L + 1):
                rels.append(
                    ("4a", _commutator(_w(P, _t(th)), _w(P, _h(1, -1), _t(lam), _h(1))))
                )
        for mu in range(1, N + 1):
            for nu in range(mu + 1, N + 1):
                rels.append(
                    ("4b", _commutator(_w(P, _u(mu)), _w(P, _h(1, -1), _u(nu), _h(1))))
                )
        for lam in range(1, L + 1):
            for nu in range(1, N + 1):
                rels.append(
                    ("4c", _commutator(_w(P, _t(lam)), _w(P, _h(1, -1), _u(nu), _h(1))))
                )

    return Presentation(full_generators(params), tuple(rels), params)


def expand_abbrev(let: Letter, params: GroupParams) -> Word:
    """Expand one letter to the mixed alphabet; mixed letters pass through."""
    make_letter(let.kind, let.a, let.b, let.exp, params=params)
    if let.kind in ("H", "T", "U"):
        return Word((let,), params)
    if let.kind == "A":
        j, i, e = let.a, let.b, let.exp
        down = [Letter("H", t, 0, -1) for t in range(j - 1, i, -1)]
        up = [Letter("H", t, 0, 1) for t in range(i + 1, j)]
        return free_reduce(Word(tuple(down + [Letter("H", i, 0, 2 * e)] + up), params))
    core = Letter("T" if let.kind == "B" else "U", let.b, 0, let.exp)
    k = let.a
    down = [Letter("H", t, 0, -1) for t in range(k - 1, 0, -1)]
    up = [Letter("H", t, 0, 1) for t in range(1, k)]
    return free_reduce(Word(tuple(down + [core] + up), params))


def expand_word(w: Word) -> Word:
    """Expand every pure letter of a word to the mixed alphabet."""
    out = empty_word(w.params)
    for let in w.letters:
        out = out * expand_abbrev(let, w.params)
    return out


def export_presentation(pres: Presentation, fmt: str = "text") -> str:
    """Serialize deterministically; `fmt` is text, json or algebra.

    Output never mentions the cone orders, so it is byte-identical for
    any m at the same (n, L, N).
    """
    gens = [letter_to_text(g) for g in pres.generators]
    if fmt == "text":
        lines = ["generators: " + " ".join(gens), "relators:"]
        lines += [f"[{tag}] {word_to_text(w)}" for tag, w in pres.relators]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        obj = {
            "generators": gens,
            "params": {"n": pres.params.n, "L": pres.params.L, "N": pres.params.N},
            "relators": [{"family": tag, "word": word_to_text(w)} for tag, w in pres.relators],
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "algebra":
        rel_texts = [word_to_text(w) for _, w in pres.relators]
        return f"< {', '.join(gens)} | {', '.join(rel_texts)} >\n"
    raise PresentationError(f"unknown export format {fmt!r}")
