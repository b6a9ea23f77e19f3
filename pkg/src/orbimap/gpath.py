"""G-paths: edge paths in the orbifold universal cover, up to deck motion.

A GPath alternates group coefficients and translated segments,

    g0, (c1)s1, g1, (c2)s2, g2, ..., (cp)sp, gp

where the g_i and translates c_i live in Gamma and each segment carries an
identity token.  Two moves preserve the geodesic it describes:

  shift i by h:  (g_{i-1}, c_i, g_i) -> (g_{i-1} h^-1, h c_i, h g_i)
  subdivide i:   segment i splits into two halves with the same translate
                 and an identity coefficient between them

normalize pushes every coefficient into a single leading group element and
returns the continuous form: piece i keeps delta_i = (g_i ... g_p)^-1 c_i,
and adjacent sibling halves that end up with equal deltas re-merge to their
parent segment.

Text forms: continuous `(g; [d1]s1, [d2]s2, ...)`; a general path
interleaves groups: `(g0; [c1]s1, g1, [c2]s2, g2)`.
"""

from __future__ import annotations

import dataclasses
import re

from .gamma import (
    IDENTITY,
    GammaElement,
    GammaError,
    gamma_from_text,
    gamma_inverse,
    gamma_multiply,
    gamma_to_text,
    validate_gamma,
)
from .params import GroupParams, OrbimapError


class GPathError(OrbimapError):
    """Invalid G-path structure or malformed G-path text."""


@dataclasses.dataclass(frozen=True)
class SegmentToken:
    id: int
    parent: tuple[int, int] | None = None  # (parent id, half 1|2), None for roots

    def __str__(self) -> str:
        return f"s{self.id}"


@dataclasses.dataclass(frozen=True)
class GPath:
    groups: tuple[GammaElement, ...]  # g0 .. gp
    segments: tuple[tuple[GammaElement, SegmentToken], ...]  # (translate, token)
    # Every token that was ever live on this path, so halves can re-merge
    # to their literal parent across subdivision generations.
    history: tuple[SegmentToken, ...]

    @property
    def p(self) -> int:
        return len(self.segments)


@dataclasses.dataclass(frozen=True)
class ContinuousForm:
    g: GammaElement  # product g0 g1 ... gp
    pieces: tuple[tuple[GammaElement, SegmentToken], ...]  # (delta, token)

    def __str__(self) -> str:
        return continuous_to_text(self)


def make_gpath(
    groups: list[GammaElement] | tuple[GammaElement, ...],
    translates: list[GammaElement] | tuple[GammaElement, ...],
    params: GroupParams,
) -> GPath:
    """Fresh path with root tokens s1..sp; needs len(groups) == p+1, p >= 1."""
    p = len(translates)
    if p < 1:
        raise GPathError("a G-path needs at least one segment")
    if len(groups) != p + 1:
        raise GPathError(f"need {p + 1} group coefficients for {p} segments, got {len(groups)}")
    for g in list(groups) + list(translates):
        validate_gamma(g, params)
    tokens = tuple(SegmentToken(i) for i in range(1, p + 1))
    segments = tuple((c, t) for c, t in zip(translates, tokens))
    return GPath(tuple(groups), segments, tokens)


def _next_id(path: GPath) -> int:
    return max((t.id for t in path.history), default=0) + 1


def gpath_shift(path: GPath, i: int, h: GammaElement, params: GroupParams) -> GPath:
    """Shift move at segment i (1-based) by h."""
    if not 1 <= i <= path.p:
        raise GPathError(f"segment index {i} out of range 1..{path.p}")
    validate_gamma(h, params)
    h_inv = gamma_inverse(h, params)
    groups = list(path.groups)
    groups[i - 1] = gamma_multiply(groups[i - 1], h_inv, params)
    groups[i] = gamma_multiply(h, groups[i], params)
    segments = list(path.segments)
    c, tok = segments[i - 1]
    segments[i - 1] = (gamma_multiply(h, c, params), tok)
    return GPath(tuple(groups), tuple(segments), path.history)


def gpath_subdivide(path: GPath, i: int) -> GPath:
    """Subdivide segment i into halves; inserts an identity coefficient."""
    if not 1 <= i <= path.p:
        raise GPathError(f"segment index {i} out of range 1..{path.p}")
    c, tok = path.segments[i - 1]
    nid = _next_id(path)
    first = SegmentToken(nid, (tok.id, 1))
    second = SegmentToken(nid + 1, (tok.id, 2))
    groups = path.groups[:i] + (IDENTITY,) + path.groups[i:]
    segments = path.segments[: i - 1] + ((c, first), (c, second)) + path.segments[i:]
    return GPath(groups, segments, path.history + (first, second))


def gpath_normalize(path: GPath, params: GroupParams) -> ContinuousForm:
    """Continuous form: total group element plus per-piece deltas, merged."""
    p = path.p
    suffix_inv = IDENTITY  # (g_i ... g_p)^-1, built right to left
    deltas: list[GammaElement] = [IDENTITY] * p
    for i in range(p, 0, -1):
        suffix_inv = gamma_multiply(suffix_inv, gamma_inverse(path.groups[i], params), params)
        deltas[i - 1] = gamma_multiply(suffix_inv, path.segments[i - 1][0], params)
    total = gamma_multiply(path.groups[0], gamma_inverse(suffix_inv, params), params)

    by_id = {t.id: t for t in path.history}
    pieces = [(deltas[i], path.segments[i][1]) for i in range(p)]
    merged = True
    while merged:
        merged = False
        for j in range(len(pieces) - 1):
            (d1, t1), (d2, t2) = pieces[j], pieces[j + 1]
            if (
                t1.parent is not None
                and t2.parent is not None
                and t1.parent[0] == t2.parent[0]
                and t1.parent[1] == 1
                and t2.parent[1] == 2
                and d1 == d2
                and t1.parent[0] in by_id
            ):
                pieces[j : j + 2] = [(d1, by_id[t1.parent[0]])]
                merged = True
                break
    return ContinuousForm(total, tuple(pieces))


def continuous_to_path(cf: ContinuousForm, history: tuple[SegmentToken, ...]) -> GPath:
    """View a continuous form as a G-path again (all inner coefficients trivial)."""
    p = len(cf.pieces)
    groups = (cf.g,) + (IDENTITY,) * p
    return GPath(groups, cf.pieces, history)


def continuous_to_text(cf: ContinuousForm) -> str:
    items = ", ".join(f"[{gamma_to_text(d)}]{t}" for d, t in cf.pieces)
    return f"({gamma_to_text(cf.g)}; {items})"


def gpath_to_text(path: GPath) -> str:
    items: list[str] = []
    for i, (c, t) in enumerate(path.segments, start=1):
        items.append(f"[{gamma_to_text(c)}]{t}")
        items.append(gamma_to_text(path.groups[i]))
    return f"({gamma_to_text(path.groups[0])}; {', '.join(items)})"


_SEG_RE = re.compile(r"\[(?P<g>[^\]]*)\]s(?P<id>[1-9][0-9]*)$")


def gpath_from_text(text: str, params: GroupParams) -> GPath:
    """Parse `(g0; [c1]s1, g1, [c2]s2, g2, ...)`; tokens come in parentless."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise GPathError("G-path text must be wrapped in parentheses")
    body = text[1:-1]
    head, sep, rest = body.partition(";")
    if not sep:
        raise GPathError("missing ';' after the leading group element")
    try:
        groups = [gamma_from_text(head.strip(), params)]
        items = [s.strip() for s in rest.split(",")] if rest.strip() else []
        if len(items) % 2 != 0:
            raise GPathError("expected alternating [translate]s<id>, group items")
        segments: list[tuple[GammaElement, SegmentToken]] = []
        ids: set[int] = set()
        for k in range(0, len(items), 2):
            m = _SEG_RE.fullmatch(items[k])
            if m is None:
                raise GPathError(f"bad segment item {items[k]!r}")
            sid = int(m.group("id"))
            if sid in ids:
                raise GPathError(f"duplicate segment id s{sid}")
            ids.add(sid)
            segments.append((gamma_from_text(m.group("g"), params), SegmentToken(sid)))
            groups.append(gamma_from_text(items[k + 1], params))
    except GammaError as err:
        raise GPathError(str(err)) from err
    if not segments:
        raise GPathError("a G-path needs at least one segment")
    return GPath(tuple(groups), tuple(segments), tuple(t for _, t in segments))
