"""Arithmetic in Gamma = Z_m1 * Z_m2 * ... * Z_mN (free product of cyclic groups).

Elements are kept in normal form: an alternating sequence of syllables
(factor, exponent) with adjacent factors distinct and 1 <= exponent <=
m_factor - 1.  The empty sequence is the identity.

Text form: `g1^2*g3*g1`; the identity is `e`.
"""

from __future__ import annotations

import dataclasses
import random
import re

from .params import GroupParams, OrbimapError


class GammaError(OrbimapError):
    """Invalid Gamma element or malformed Gamma text."""


@dataclasses.dataclass(frozen=True)
class GammaElement:
    syllables: tuple[tuple[int, int], ...]  # (factor 1..N, exponent 1..m-1)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        return gamma_to_text(self)


IDENTITY = GammaElement(())


def validate_gamma(a: GammaElement, params: GroupParams) -> GammaElement:
    """Check normal form: factor bounds, exponent ranges, alternation."""
    prev = 0
    for f, e in a.syllables:
        if not 1 <= f <= params.N:
            raise GammaError(f"factor {f} out of range 1..{params.N}")
        if not 1 <= e <= params.order(f) - 1:
            raise GammaError(f"exponent {e} out of range 1..{params.order(f) - 1} for g{f}")
        if f == prev:
            raise GammaError(f"adjacent syllables share factor g{f}")
        prev = f
    return a


def _push(syls: list[tuple[int, int]], f: int, e: int, params: GroupParams) -> None:
    # Append one syllable, merging mod m with the tail; drops trivial results.
    if not 1 <= f <= params.N:
        raise GammaError(f"factor {f} out of range 1..{params.N}")
    if syls and syls[-1][0] == f:
        f_prev, e_prev = syls.pop()
        e = e + e_prev
    e %= params.order(f)
    if e:
        syls.append((f, e))


def gamma_multiply(a: GammaElement, b: GammaElement, params: GroupParams) -> GammaElement:
    syls = list(a.syllables)
    for f, e in b.syllables:
        _push(syls, f, e, params)
    return GammaElement(tuple(syls))


def gamma_inverse(a: GammaElement, params: GroupParams) -> GammaElement:
    return GammaElement(tuple((f, params.order(f) - e) for f, e in reversed(a.syllables)))


def gamma_is_identity(a: GammaElement) -> bool:
    return a.is_identity


def gamma_product(elems: list[GammaElement] | tuple[GammaElement, ...], params: GroupParams) -> GammaElement:
    out = IDENTITY
    for el in elems:
        out = gamma_multiply(out, el, params)
    return out


def gamma_pow(a: GammaElement, k: int, params: GroupParams) -> GammaElement:
    if k < 0:
        return gamma_pow(gamma_inverse(a, params), -k, params)
    out = IDENTITY
    for _ in range(k):
        out = gamma_multiply(out, a, params)
    return out


_SYL_RE = re.compile(r"g([1-9][0-9]*)(?:\^(-?[0-9]+))?$")


def gamma_from_text(text: str, params: GroupParams) -> GammaElement:
    """Parse Gamma text; exponents are normalized mod the factor order."""
    text = text.strip()
    if text == "e":
        return IDENTITY
    syls: list[tuple[int, int]] = []
    for part in text.split("*"):
        m = _SYL_RE.fullmatch(part.strip())
        if m is None:
            raise GammaError(f"bad syllable {part.strip()!r}")
        f = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        _push(syls, f, e, params)
    return GammaElement(tuple(syls))


def gamma_to_text(a: GammaElement) -> str:
    if a.is_identity:
        return "e"
    return "*".join(f"g{f}" if e == 1 else f"g{f}^{e}" for f, e in a.syllables)


def gamma_random(params: GroupParams, length: int, rng: random.Random | int | None = None) -> GammaElement:
    """Random normal-form element with at most `length` syllables."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if params.N == 0 or length <= 0:
        return IDENTITY
    syls: list[tuple[int, int]] = []
    prev = 0
    for _ in range(length):
        choices = [f for f in range(1, params.N + 1) if f != prev]
        if not choices:
            break
        f = rng.choice(choices)
        syls.append((f, rng.randint(1, params.order(f) - 1)))
        prev = f
    return GammaElement(tuple(syls))
