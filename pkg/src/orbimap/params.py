"""Surface parameters: a disk with n marked points, L punctures and N cone points.

The cone point ν has order m[ν-1] >= 2.  Cone orders only influence the
Gamma-coefficient arithmetic (free product of cyclic groups) and G-path
normalization; every mapping-class computation is independent of m.
"""

from __future__ import annotations

import dataclasses


class OrbimapError(Exception):
    """Base class for all errors raised by this package."""


class ParamsError(OrbimapError):
    """Invalid surface parameters."""


@dataclasses.dataclass(frozen=True)
class GroupParams:
    n: int  # marked points (punctures that mapping classes may permute)
    L: int  # punctures that stay fixed pointwise
    N: int  # cone points
    m: tuple[int, ...] = ()  # cone orders, one per cone point, each >= 2

    def __post_init__(self) -> None:
        if self.n < 0 or self.L < 0 or self.N < 0:
            raise ParamsError(f"n, L, N must be >= 0, got ({self.n}, {self.L}, {self.N})")
        if not isinstance(self.m, tuple):
            object.__setattr__(self, "m", tuple(self.m))
        if len(self.m) != self.N:
            raise ParamsError(f"need exactly N={self.N} cone orders, got {len(self.m)}")
        if any(mi < 2 for mi in self.m):
            raise ParamsError(f"cone orders must be >= 2, got {self.m}")

    def order(self, nu: int) -> int:
        """Order of cone point nu (1-based)."""
        if not 1 <= nu <= self.N:
            raise ParamsError(f"cone point index {nu} out of range 1..{self.N}")
        return self.m[nu - 1]

    def forget_marked(self) -> "GroupParams":
        """Parameters after forgetting the last marked point."""
        if self.n < 1:
            raise ParamsError("no marked point to forget at n=0")
        return GroupParams(self.n - 1, self.L, self.N, self.m)

    def add_marked(self) -> "GroupParams":
        """Parameters after adding one marked point."""
        return GroupParams(self.n + 1, self.L, self.N, self.m)


def params(n: int, L: int, N: int, m: tuple[int, ...] | list[int] | None = None) -> GroupParams:
    """Convenience constructor; m defaults to all cone orders 2."""
    if m is None:
        m = (2,) * N
    return GroupParams(n, L, N, tuple(m))
