"""Independent word-problem oracle via the Artin action on a free group.

The disk with N cone points, L punctures and n marked points embeds into
the braid group B_M of an (N+L+n)-strand disk, forgetting all orbifold
data (the oracle never sees the cone orders).  Strand layout, left to
right:

    cone point v  -> strand N - v + 1
    puncture l    -> strand N + L - l + 1
    marked point j-> strand N + L + j

Generators map to braids: H(j) to the elementary crossing of the adjacent
marked strands, T(l)/U(v) to a band where marked strand 1 reaches across
the intermediate strands and loops its target.  Whether that band passes
under or over the intermediate strands is a convention; validate_embedding
determines the side that satisfies all defining relators (trying the flip
once) and caches it per (n, L, N).

Triviality is decided by the Artin action of B_M on the free group F_M,
which is faithful; a permutation gate and the linking-number matrix act as
sound fast rejections before the full action runs.
"""

from __future__ import annotations

import dataclasses

from .params import GroupParams, OrbimapError
from .presentations import expand_word, full_presentation, pure_presentation
from .words import AlphabetError, Letter, Word, letter_to_text, reduce_runs

BraidRuns = list[tuple[int, int]]  # (generator index i of sigma_i, exponent)

_MAX_IMAGE_TOTAL = 10**7  # runs across all strand images; exceeded = bug, not verdict


class OracleError(OrbimapError):
    """Oracle failure (embedding validation or internal blowup)."""


class EmbeddingError(OracleError):
    """No band-side convention satisfies the defining relators."""

    def __init__(self, message: str, failures: tuple[str, ...]):
        super().__init__(message)
        self.failures = failures


@dataclasses.dataclass(frozen=True)
class StrandLayout:
    params: GroupParams

    @property
    def strands(self) -> int:
        return self.params.N + self.params.L + self.params.n

    def cone(self, nu: int) -> int:
        return self.params.N - nu + 1

    def puncture(self, lam: int) -> int:
        return self.params.N + self.params.L - lam + 1

    def marked(self, j: int) -> int:
        return self.params.N + self.params.L + j


@dataclasses.dataclass(frozen=True)
class EmbeddingReport:
    convention: str  # "under" or "over"
    relators_checked: int
    bands_checked: int
    failures: tuple[str, ...]  # empty on success


def band_word(t: int, s: int, exp: int, convention: str) -> BraidRuns:
    """Band braid where strand t reaches across to loop strand s (s < t).

    Conjugating crossings pass under ("under") or over ("over") the
    intermediate strands; the looped core is sigma_s^(2 exp) either way.
    """
    side = 1 if convention == "under" else -1
    down = [(i, side) for i in range(t - 1, s, -1)]
    up = [(i, -side) for i in range(s + 1, t)]
    return down + [(s, 2 * exp)] + up


def embed_letter(let: Letter, params: GroupParams, convention: str) -> BraidRuns:
    lay = StrandLayout(params)
    if let.kind == "H":
        return [(lay.marked(let.a), let.exp)]
    if let.kind == "T":
        return band_word(lay.marked(1), lay.puncture(let.a), let.exp, convention)
    if let.kind == "U":
        return band_word(lay.marked(1), lay.cone(let.a), let.exp, convention)
    raise AlphabetError(
        f"embed expects mixed letters; expand {letter_to_text(let)} first"
    )


def embed_word(w: Word, params: GroupParams, convention: str | None = None) -> BraidRuns:
    """Embed a mixed-alphabet word into B_(N+L+n) as freely reduced runs."""
    if convention is None:
        convention = validate_embedding(params).convention
    runs: list[tuple[int, int]] = []
    for let in w.letters:
        runs.extend(embed_letter(let, params, convention))
    return reduce_runs(runs)


def braid_to_text(runs: BraidRuns) -> str:
    return " ".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in runs)


def braid_perm_is_identity(runs: BraidRuns, M: int) -> bool:
    pos = list(range(M))
    for i, e in runs:
        if e % 2 != 0:
            pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return all(p == k for k, p in enumerate(pos))


def braid_linking_is_zero(runs: BraidRuns, M: int) -> bool:
    """Necessary condition: every pairwise linking number vanishes."""
    pos = list(range(M))  # strand occupying each position
    lk: dict[tuple[int, int], int] = {}
    for i, e in runs:
        a, b = pos[i - 1], pos[i]
        key = (a, b) if a < b else (b, a)
        lk[key] = lk.get(key, 0) + e
        if e % 2 != 0:
            pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return all(v == 0 for v in lk.values())


def _inv_runs(runs: BraidRuns | tuple) -> list[tuple[int, int]]:
    return [(g, -e) for g, e in reversed(runs)]


def artin_is_trivial(runs: BraidRuns, M: int) -> bool:
    """Exact triviality via the (faithful) Artin action on F_M.

    sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i; images of
    the basis are maintained as reduced runs while scanning the braid.
    """
    images: list[list[tuple[int, int]]] = [[(t, 1)] for t in range(1, M + 1)]
    total = M
    for i, e in runs:
        sign = 1 if e > 0 else -1
        for _ in range(abs(e)):
            a, b = images[i - 1], images[i]
            if sign > 0:
                new_a = reduce_runs(a + b + _inv_runs(a))
                images[i - 1], images[i] = new_a, a
                total += len(new_a) - len(b)
            else:
                new_b = reduce_runs(_inv_runs(b) + a + b)
                images[i - 1], images[i] = b, new_b
                total += len(new_b) - len(a)
            if total > _MAX_IMAGE_TOTAL:
                raise OracleError(
                    f"artin image blowup past {_MAX_IMAGE_TOTAL} runs on braid of "
                    f"length {sum(abs(x) for _, x in runs)}"
                )
    return all(img == [(t, 1)] for t, img in enumerate(images, start=1))


def braid_is_trivial(runs: BraidRuns, M: int) -> bool:
    runs = reduce_runs(runs)
    if not runs:
        return True
    if not braid_perm_is_identity(runs, M):
        return False
    if not braid_linking_is_zero(runs, M):
        return False
    return artin_is_trivial(runs, M)


def oracle_is_trivial(w: Word, convention: str | None = None) -> bool:
    """Decide triviality of any word (pure letters are expanded first)."""
    params = w.params
    mixed = expand_word(w)
    runs = embed_word(mixed, params, convention)
    return braid_is_trivial(runs, StrandLayout(params).strands)


def oracle_equal(u: Word, v: Word, convention: str | None = None) -> bool:
    return oracle_is_trivial(u * v.inverse(), convention)


def _convention_failures(params: GroupParams, convention: str) -> tuple[list[str], int, int]:
    """All relator/band checks that fail under one band-side convention."""
    M = StrandLayout(params).strands
    failures: list[str] = []
    n_rel = 0
    presentations = [("pure", pure_presentation(params))]
    if params.n >= 1:
        presentations.append(("full", full_presentation(params)))
    for label, pres in presentations:
        for tag, rel in pres.relators:
            n_rel += 1
            runs = embed_word(expand_word(rel), params, convention)
            if not braid_is_trivial(runs, M):
                failures.append(f"{label} relator [{tag}] {rel}")
    lay = StrandLayout(params)
    n_band = 0
    for j in range(2, params.n + 1):
        for i in range(1, j):
            n_band += 1
            a = Word((Letter("A", j, i, 1),), params)
            runs = embed_word(expand_word(a), params, convention)
            runs = reduce_runs(runs + _inv_runs(band_word(lay.marked(j), lay.marked(i), 1, convention)))
            if not braid_is_trivial(runs, M):
                failures.append(f"band A({j},{i})")
    return failures, n_rel, n_band


_VALIDATED: dict[tuple[int, int, int], EmbeddingReport] = {}


def validate_embedding(params: GroupParams) -> EmbeddingReport:
    """Find the band-side convention satisfying every defining relator.

    Checks (i) all pure and full relators embed to trivial braids and
    (ii) each A(j,i) expansion embeds to the band of the two marked
    strands.  Tries "under" first, retries "over" on failure; if both
    fail, the embedding itself is broken and computation must stop.
    Results are cached per (n, L, N); the cone orders never matter here.
    """
    key = (params.n, params.L, params.N)
    hit = _VALIDATED.get(key)
    if hit is not None:
        return hit
    attempts: list[tuple[str, tuple[str, ...]]] = []
    for convention in ("under", "over"):
        failures, n_rel, n_band = _convention_failures(params, convention)
        if not failures:
            report = EmbeddingReport(convention, n_rel, n_band, ())
            _VALIDATED[key] = report
            return report
        attempts.append((convention, tuple(failures)))
    detail = "; ".join(
        f"{conv}: {len(fails)} failures, first: {fails[0]}" for conv, fails in attempts
    )
    raise EmbeddingError(f"no band convention satisfies the relators ({detail})", attempts[0][1])
