"""Shared brute-force oracles and random-instance helpers.

Everything here is deliberately independent of the library's elimination
and search code: rank by row-span enumeration, min rank by trying every
diagonal against that span rank, interlacement by the pairwise crossing
condition on occurrence positions.
"""

from __future__ import annotations

import itertools
import random

from diagrank.gf2 import DiagonalAssignment, Gf2Matrix, with_diagonal
from diagrank.hieroglyph import Hieroglyph


def span_rank(m: Gf2Matrix) -> int:
    """Rank as log2 of the number of distinct XOR combinations of rows."""
    span = {0}
    for row in m.rows:
        span |= {v ^ row for v in span}
    return len(span).bit_length() - 1


def brute_force_min_rank(m: Gf2Matrix) -> int:
    """Minimum span rank over every one of the 2^n diagonals (tiny n only)."""
    assert m.n <= 10, "brute force oracle is for tiny matrices"
    best = m.n
    for bits in itertools.product((0, 1), repeat=m.n):
        d = DiagonalAssignment.from_bits(bits)
        best = min(best, span_rank(with_diagonal(m, d)))
        if best == 0:
            break
    return best


def random_matrix(rng: random.Random, n: int, density: float = 0.5) -> Gf2Matrix:
    rows = tuple(
        sum(1 << j for j in range(n) if rng.random() < density) for _ in range(n)
    )
    return Gf2Matrix(n, rows)


def random_diagonal(rng: random.Random, n: int) -> DiagonalAssignment:
    return DiagonalAssignment(n, rng.getrandbits(n) if n else 0)


def token_names(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"t{i}" for i in range(n)]


def random_hieroglyph(rng: random.Random, n: int) -> Hieroglyph:
    word = token_names(n) * 2
    rng.shuffle(word)
    return Hieroglyph(tuple(word))


def naive_overlap(h: Hieroglyph) -> list[list[int]]:
    """Pairwise interlacement via the crossing condition on positions.

    Letters interlace iff exactly one occurrence of one lies strictly
    between the two occurrences of the other.
    """
    order = list(h.alphabet)
    pos = {tok: [] for tok in order}
    for p, tok in enumerate(h.letters):
        pos[tok].append(p)
    n = h.n
    out = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        p1, p2 = pos[order[i]]
        q1, q2 = pos[order[j]]
        crossing = (p1 < q1 < p2) != (p1 < q2 < p2)
        out[i][j] = out[j][i] = int(crossing)
    return out


def rotate_word(h: Hieroglyph, offset: int) -> Hieroglyph:
    w = h.letters
    return Hieroglyph(w[offset % len(w):] + w[: offset % len(w)]) if w else h


def reverse_word(h: Hieroglyph) -> Hieroglyph:
    return Hieroglyph(h.letters[::-1])


def relabel_word(h: Hieroglyph, rng: random.Random) -> Hieroglyph:
    fresh = [f"r{i}" for i in range(h.n)]
    rng.shuffle(fresh)
    mapping = dict(zip(h.alphabet, fresh))
    return Hieroglyph(tuple(mapping[tok] for tok in h.letters))


def random_image(h: Hieroglyph, rng: random.Random) -> Hieroglyph:
    """Random combination of rotation, optional reversal, and relabeling."""
    img = rotate_word(h, rng.randrange(max(len(h.letters), 1)))
    if rng.random() < 0.5:
        img = reverse_word(img)
    return relabel_word(img, rng)
