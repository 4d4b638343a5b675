"""Pure-Python permutation-braid kernels.

``braidkit._speedups`` is the compiled twin of this module;
``braidkit._kernel`` selects one of the two at import time. The two
implementations must stay in lockstep and return bit-identical results
(tests/test_kernel.py checks this on random inputs).

Data layout: a canonical factor of B_n is a permutation of
``{0, ..., n-1}`` stored as ``n`` bytes, image of ``k`` at offset ``k``.
A factor sequence is the concatenation of its factors' buffers, so
``len(flat) == factors * n``. The pair ``(delta, flat)`` denotes the
braid ``Delta^delta * A_1 * ... * A_l``.

Descent conventions (0-based index ``i`` names the crossing of positions
``i`` and ``i+1``): ``i`` is in the starting set of a factor ``A`` iff
``A[i] > A[i+1]``, and in the finishing set iff ``A^-1`` has a descent at
``i``. A sequence is left-weighted when every adjacent pair ``(A, B)``
satisfies ``starting(B) <= finishing(A)``.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def _is_w0(buf: bytearray, off: int, n: int) -> bool:
    for t in range(n):
        if buf[off + t] != n - 1 - t:
            return False
    return True


def _is_id(buf: bytearray, off: int, n: int) -> bool:
    for t in range(n):
        if buf[off + t] != t:
            return False
    return True


def normalize(n: int, delta: int, flat: bytes) -> tuple[int, bytes]:
    """Left-weight a factor sequence; absorb Delta factors, drop trivial ones.

    One sliding pass visits each adjacent pair (A, B) in order and, while
    some index i is a descent of B but not of A^-1, moves the crossing i
    from the front of B to the back of A (smallest eligible i first).
    Passes repeat until one makes no change; at that point every leading
    factor equal to Delta migrates into the Delta power and every
    trailing identity factor is dropped.
    """
    if n == 1:
        # B_1 is trivial and Delta is the identity, so everything collapses.
        return 0, b""
    m = len(flat) // n
    if m == 0:
        return delta, b""
    buf = bytearray(flat)
    inv = bytearray(n)
    changed = True
    passes = 0
    while changed:
        changed = False
        passes += 1
        if passes > m + 2:  # one pass per factor suffices; +2 is slack
            raise RuntimeError("factor sliding failed to converge")
        for k in range(m - 1):
            a = k * n
            b = a + n
            for t in range(n):
                inv[buf[a + t]] = t
            while True:
                move = -1
                for i in range(n - 1):
                    if buf[b + i] > buf[b + i + 1] and inv[i] < inv[i + 1]:
                        move = i
                        break
                if move < 0:
                    break
                changed = True
                # Strip crossing `move` from the front of B: swap entries.
                buf[b + move], buf[b + move + 1] = buf[b + move + 1], buf[b + move]
                # Append it to A: swap the values move, move+1.
                pa, pb = inv[move], inv[move + 1]
                buf[a + pa] = move + 1
                buf[a + pb] = move
                inv[move], inv[move + 1] = pb, pa
    lo = 0
    while lo < m and _is_w0(buf, lo * n, n):
        lo += 1
    hi = m
    while hi > lo and _is_id(buf, (hi - 1) * n, n):
        hi -= 1
    return delta + lo, bytes(buf[lo * n : hi * n])


def _tau_flat(n: int, flat: bytes) -> bytes:
    """Apply the flip automorphism to every factor: tau(A)[k] = n-1-A[n-1-k]."""
    out = bytearray(len(flat))
    for off in range(0, len(flat), n):
        for t in range(n):
            out[off + t] = n - 1 - flat[off + n - 1 - t]
    return bytes(out)


def multiply(n: int, p1: int, flat1: bytes, p2: int, flat2: bytes) -> tuple[int, bytes]:
    """Normal form of (Delta^p1 * flat1) * (Delta^p2 * flat2).

    Delta^p2 moves to the front through flat1, twisting each factor by
    the flip automorphism when p2 is odd.
    """
    if n == 1:
        return 0, b""
    first = _tau_flat(n, flat1) if p2 % 2 else flat1
    return normalize(n, p1 + p2, first + flat2)


def conjugate_by_simple(n: int, p: int, flat: bytes, s: bytes) -> tuple[int, bytes]:
    """Normal form of s^-1 * (Delta^p * flat) * s for a simple element s.

    s^-1 = Delta^-1 * (Delta s^-1) and Delta s^-1 is again simple, so the
    input rewrites to Delta^(p-1) * tau^p(Delta s^-1) * flat * s.
    """
    if n == 1:
        return 0, b""
    inv = bytearray(n)
    for t in range(n):
        inv[s[t]] = t
    head = bytearray(n)
    for t in range(n):
        head[t] = inv[n - 1 - t]
    if p % 2:
        head = bytearray(_tau_flat(n, bytes(head)))
    return normalize(n, p - 1, bytes(head) + flat + s)


def conjugate_batch(
    n: int, p: int, flat: bytes, simples: Sequence[bytes]
) -> list[tuple[int, bytes]]:
    """conjugate_by_simple against every element of ``simples``, in order."""
    return [conjugate_by_simple(n, p, flat, s) for s in simples]
