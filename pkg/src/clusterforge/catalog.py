"""Named quivers used throughout the library and its tests."""

from __future__ import annotations

from .quiver import Quiver


def kronecker() -> Quiver:
    """Two arrows 2 -> 1; vertex 1 is the sink."""
    return Quiver((1, 2), ((2, 1), (2, 1)))


def affine_a(r: int, s: int) -> Quiver:
    """Cycle on 1..r+s with r arrows k -> k+1 followed by s arrows pointing back.

    affine_a(2, 1) is 1->2, 2->3, 1->3 and affine_a(3, 1) is 1->2, 2->3, 3->4, 1->4.
    """
    if r < 1 or s < 1:
        raise ValueError("both orientation counts must be positive")
    n = r + s
    if n == 2:
        return kronecker()
    arrows = []
    for k in range(1, n + 1):
        nxt = k % n + 1
        if k <= r:
            arrows.append((k, nxt))
        else:
            arrows.append((nxt, k))
    return Quiver(tuple(range(1, n + 1)), tuple(arrows))


def square_a22() -> Quiver:
    """1->2, 1->3, 2->4, 3->4: affine type A with two arrows each way."""
    return Quiver((1, 2, 3, 4), ((1, 2), (1, 3), (2, 4), (3, 4)))


def linear_a(n: int) -> Quiver:
    return Quiver(tuple(range(1, n + 1)), tuple((k, k + 1) for k in range(1, n)))


def d4() -> Quiver:
    """Three leaves 1, 3, 4 pointing into the centre 2."""
    return Quiver((1, 2, 3, 4), ((1, 2), (3, 2), (4, 2)))


def doubled_three_cycle() -> Quiver:
    return Quiver((1, 2, 3), ((1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)))


NAMED = {
    "kronecker": kronecker,
    "a21": lambda: affine_a(2, 1),
    "a31": lambda: affine_a(3, 1),
    "a22": square_a22,
    "a2": lambda: linear_a(2),
    "a3": lambda: linear_a(3),
    "d4": d4,
}
