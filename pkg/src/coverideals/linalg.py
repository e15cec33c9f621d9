"""Exact rank of sparse integer matrices over Q or a prime field.

The boundary matrices this package produces are sparse with entries that
start at +-1, so ranks are computed by a column-reduction elimination in the
style of the persistence algorithm: each column is reduced against the
pivot column with the same lowest row until its lowest row is fresh.

Over the rationals the updates are fraction-free: columns stay integral and
are divided by their content after every combination, which keeps entries
small without ever rounding.  Over GF(p) arithmetic is plain modular.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def matrix_rank(columns: Iterable[dict], p: int | None = None) -> int:
    """Rank of the matrix whose columns are {row_index: value} dicts.

    ``p`` selects GF(p); ``None`` means exact rank over the rationals.
    Input dicts are not modified.
    """
    if p is None:
        return _rank_rationals(columns)
    return _rank_mod_p(columns, p)


def _content_reduce(col: dict) -> None:
    g = 0
    for v in col.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for r in col:
            col[r] //= g


def _rank_rationals(columns: Iterable[dict]) -> int:
    pivots: dict[int, dict] = {}  # lowest row -> pivot column
    rank = 0
    for col in columns:
        col = {r: v for r, v in col.items() if v}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                _content_reduce(col)
                pivots[low] = col
                rank += 1
                break
            a, b = piv[low], col[low]
            # col <- a*col - b*piv zeroes row `low` and only touches rows below it
            new = {}
            for r, v in col.items():
                new[r] = a * v
            for r, v in piv.items():
                w = new.get(r, 0) - b * v
                if w:
                    new[r] = w
                else:
                    new.pop(r, None)
            col = new
            _content_reduce(col)
    return rank


def _rank_mod_p(columns: Iterable[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    rank = 0
    for col in columns:
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                rank += 1
                break
            factor = (col[low] * pow(piv[low], p - 2, p)) % p
            new = dict(col)
            for r, v in piv.items():
                w = (new.get(r, 0) - factor * v) % p
                if w:
                    new[r] = w
                else:
                    new.pop(r, None)
            col = new
    return rank
