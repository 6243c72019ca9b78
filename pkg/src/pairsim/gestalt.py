"""Ratcliff/Obershelp gestalt matching over character sequences.

Two texts are compared by finding their longest common contiguous block,
then recursing into the unmatched regions on either side of it.  The
similarity score is twice the total matched length divided by the combined
length of both inputs, reported on a 0-100 scale: 100 for identical
sequences, 0 when no character matches.

All functions operate on Unicode scalar values (one character = one code
point) and are pure; they can be called concurrently without restriction.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "MatchBlock",
    "GestaltScore",
    "longest_match",
    "matching_characters",
    "gestalt_ratio",
]


@dataclass(frozen=True)
class MatchBlock:
    """A contiguous run ``a[start_a : start_a+length] == b[start_b : start_b+length]``.

    ``length == 0`` is the sentinel for "no common character"; its start
    indices then point at the beginning of the searched ranges.
    """

    start_a: int
    start_b: int
    length: int


@dataclass(frozen=True)
class GestaltScore:
    """Similarity on the 0-100 scale.

    100 iff the sequences are identical, 0 iff they share no character.
    """

    value: float

    def as_similarity(self) -> float:
        """The same score mapped onto [0, 1]."""
        return self.value / 100.0


def _position_index(b: str) -> dict[str, list[int]]:
    """Index of each character's occurrence positions in ``b``, ascending."""
    positions: dict[str, list[int]] = {}
    for j, ch in enumerate(b):
        positions.setdefault(ch, []).append(j)
    return positions


def _longest_match_indexed(
    a: str,
    positions: dict[str, list[int]],
    a_lo: int,
    a_hi: int,
    b_lo: int,
    b_hi: int,
) -> MatchBlock:
    """Longest common block within the given ranges, using a prebuilt index of b.

    Run lengths ending at each ``j`` are carried from row to row; keeping
    the strictly-greater comparison means the first completed block of the
    final best length wins, which yields the smallest ``start_a`` and, for
    equal ``start_a``, the smallest ``start_b``.
    """
    best_a, best_b, best_len = a_lo, b_lo, 0
    run_ending_at: dict[int, int] = {}
    for i in range(a_lo, a_hi):
        new_runs: dict[int, int] = {}
        for j in positions.get(a[i], ()):
            if j < b_lo:
                continue
            if j >= b_hi:
                break
            k = run_ending_at.get(j - 1, 0) + 1
            new_runs[j] = k
            if k > best_len:
                best_a, best_b, best_len = i - k + 1, j - k + 1, k
        run_ending_at = new_runs
    return MatchBlock(best_a, best_b, best_len)


def _check_range(name: str, lo: int, hi: int, size: int) -> None:
    if not 0 <= lo <= hi <= size:
        raise ValueError(f"invalid {name} range [{lo}, {hi}) for length {size}")


def longest_match(
    a: str,
    b: str,
    a_lo: int = 0,
    a_hi: int | None = None,
    b_lo: int = 0,
    b_hi: int | None = None,
) -> MatchBlock:
    """Longest contiguous block common to ``a[a_lo:a_hi]`` and ``b[b_lo:b_hi]``.

    Among equal-length candidates the block with the smallest ``start_a``
    wins, ties broken by the smallest ``start_b``.  Empty ranges or
    disjoint alphabets yield the length-0 sentinel.
    """
    if a_hi is None:
        a_hi = len(a)
    if b_hi is None:
        b_hi = len(b)
    _check_range("a", a_lo, a_hi, len(a))
    _check_range("b", b_lo, b_hi, len(b))
    return _longest_match_indexed(a, _position_index(b), a_lo, a_hi, b_lo, b_hi)


def matching_characters(a: str, b: str) -> int:
    """Total matched length from the gestalt recursion.

    Finds the longest block over the whole ranges, then recurses into the
    unmatched left regions and unmatched right regions, summing block
    lengths.  Returns 0 when either input is empty.
    """
    if not a or not b:
        return 0
    positions = _position_index(b)
    total = 0
    # Explicit stack instead of recursion: token-sorted sentences can
    # produce one block per word, which would otherwise stack that deep.
    pending = [(0, len(a), 0, len(b))]
    while pending:
        a_lo, a_hi, b_lo, b_hi = pending.pop()
        block = _longest_match_indexed(a, positions, a_lo, a_hi, b_lo, b_hi)
        if block.length:
            total += block.length
            pending.append((a_lo, block.start_a, b_lo, block.start_b))
            pending.append((block.start_a + block.length, a_hi, block.start_b + block.length, b_hi))
    return total


def gestalt_ratio(a: str, b: str) -> GestaltScore:
    """Gestalt similarity of two sequences on the 0-100 scale.

    Two empty inputs are identical and score 100.  The block recursion
    prefers blocks earliest in its first argument, which makes the raw
    matched count order-sensitive; the pair is therefore put into a
    canonical order (shorter first, ties by content) so the score is
    symmetric.
    """
    if not a and not b:
        return GestaltScore(100.0)
    if (len(a), a) > (len(b), b):
        a, b = b, a
    matched = matching_characters(a, b)
    return GestaltScore(200.0 * matched / (len(a) + len(b)))
