"""Dehornoy handle reduction on raw letter sequences.

A sigma_i-handle is a factor ``s_i^e u s_i^-e`` in which ``u`` only uses
generators of index > i.  Reducing it deletes the two ends and replaces each
``s_{i+1}^d`` of ``u`` by ``s_{i+1}^-e s_i^d s_{i+1}^e``.  The scanner always
reduces the handle whose right end comes first; such a handle never contains a
nested sigma_{i+1}-handle, so it is permitted and the procedure terminates.
A handle-free word is empty, sigma-positive or sigma-negative, and only the
empty word represents the identity.
"""

from __future__ import annotations

from typing import Sequence

DEFAULT_FUEL = 10**6


class UndecidedError(RuntimeError):
    """Handle reduction ran out of fuel before reaching a handle-free word."""

    def __init__(self, fuel: int, length: int):
        super().__init__(f"handle reduction undecided after {fuel} steps (word length {length})")
        self.fuel = fuel
        self.length = length


def _free_reduce(letters: Sequence[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def handle_reduce(letters: Sequence[int], strands: int, fuel: int = DEFAULT_FUEL) -> tuple[int, ...]:
    """Return the handle-free word obtained from ``letters``.

    Each letter scanned and each letter rewritten costs one unit of ``fuel``.
    """
    w = _free_reduce(letters)
    top = max(strands, 2)
    # last[i] = signed position (pos + 1) * sign of the latest s_i letter
    # still visible, i.e. not followed by any letter of smaller index.
    last = [0] * (top + 1)
    # snapshots[p] = copy of ``last`` before scanning position p
    snapshots: list[list[int]] = []
    spent = 0
    pos = 0
    while pos < len(w):
        spent += 1
        if spent > fuel:
            raise UndecidedError(fuel, len(w))
        if len(snapshots) == pos:
            snapshots.append(last[:])
        x = w[pos]
        i = x if x > 0 else -x
        mark = last[i]
        if mark and (mark > 0) != (x > 0):
            start = (mark if mark > 0 else -mark) - 1
            e = 1 if mark > 0 else -1
            middle: list[int] = []
            for y in w[start + 1:pos]:
                if y == i + 1 or y == -(i + 1):
                    d = 1 if y > 0 else -1
                    middle.extend((-e * (i + 1), d * i, e * (i + 1)))
                else:
                    middle.append(y)
            spent += len(middle)
            middle = _free_reduce(middle)
            w[start:pos + 1] = middle
            del snapshots[start + 1:]
            last = snapshots[start][:]
            pos = start
            continue
        last[i] = (pos + 1) if x > 0 else -(pos + 1)
        for j in range(i + 1, top):
            last[j] = 0
        pos += 1
    return tuple(w)


def reduces_to_empty(letters: Sequence[int], strands: int, fuel: int = DEFAULT_FUEL) -> bool:
    return not handle_reduce(letters, strands, fuel)
