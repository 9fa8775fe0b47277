"""Shifted jeu de taquin with replayable slide records, plus Knuth moves.

Slides on semistandard tableaux are computed through standardization: the
tableau is standardized, slides are performed with the classical rules for
standard shifted tableaux (an inner hole swallows the smaller of its east
and south neighbours, an outer hole the larger of its west and north
neighbours), and the letters are de-standardized at the end.
De-standardization keeps each standardization number on its original value
and re-derives the primes of every value block as the unique split that
yields a canonical word; this is what produces the prime-adjusting
exceptional slides near the diagonal.
"""

import itertools
import random

from .core import (
    EMPTY_TABLEAU,
    InvariantError,
    ShiftedTableau,
    SkewShape,
    StrictPartition,
    Word,
    canonicalize_codes,
    letter,
    letter_value,
    prime_split,
    standardize_codes,
)

__all__ = [
    "SlideRecord",
    "inner_corners",
    "addable_cells",
    "inner_slide",
    "outer_slide",
    "rectify",
    "unrectify",
    "replay",
    "strip_tableau",
    "rectify_word",
    "yamanouchi",
    "is_lrs",
    "knuth_neighbors",
    "knuth_equivalent",
]


# ---------------------------------------------------------------------------
# Slide records

class SlideRecord:
    """A replayable sequence of slides.

    Each step is (kind, start, end): kind is "inner" or "outer", start is
    the corner where the hole appears, end is where it comes to rest.
    Reversing a record turns inner steps into outer steps rooted at the
    recorded end cells, in reverse order.
    """

    __slots__ = ("steps",)

    def __init__(self, steps=()):
        object.__setattr__(self, "steps", tuple(steps))

    def __setattr__(self, name, value):
        raise AttributeError("SlideRecord is immutable")

    def reversed(self) -> "SlideRecord":
        flipped = []
        for kind, start, end in reversed(self.steps):
            flipped.append(("outer" if kind == "inner" else "inner", end, start))
        return SlideRecord(flipped)

    def to_json_obj(self):
        return [[kind, r, c] for kind, (r, c), _ in self.steps]

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, SlideRecord) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"SlideRecord({list(self.steps)!r})"


# ---------------------------------------------------------------------------
# Shape bookkeeping for slides

def inner_corners(shape: SkewShape):
    """Maximal cells of the inner shape: where an inner slide may start."""
    mu = shape.inner
    out = []
    for r in range(1, len(mu) + 1):
        c = r + mu.part(r) - 1
        if not (r + 1 <= c <= r + mu.part(r + 1)):
            out.append((r, c))
    return out


def addable_cells(outer: StrictPartition):
    """Cells that may be appended to a strict partition shape."""
    out = []
    for r in range(1, len(outer) + 2):
        if r > 1 and outer.part(r - 1) <= outer.part(r) + 1:
            continue
        if r > len(outer) + 1:
            continue
        out.append((r, r + outer.part(r)))
    return out


def _remove_part_cell(parts: StrictPartition, r: int) -> StrictPartition:
    lst = list(parts.parts)
    lst[r - 1] -= 1
    return StrictPartition(lst)


def _add_part_cell(parts: StrictPartition, r: int) -> StrictPartition:
    lst = list(parts.parts)
    if r == len(lst) + 1:
        lst.append(1)
    else:
        lst[r - 1] += 1
    return StrictPartition(lst)


# ---------------------------------------------------------------------------
# Standardization bridge

def _standardize(T: ShiftedTableau):
    """Standard filling (cell -> number) plus the value carried by each number."""
    std_word = standardize_codes(T.word_codes)
    entries = {}
    values = [0] * len(std_word)
    for cell, num, code in zip(T.shape.cells_reading, std_word, T.word_codes):
        entries[cell] = num
        values[num - 1] = letter_value(code)
    return entries, tuple(values)


def _destandardize(shape: SkewShape, std_entries: dict, values) -> ShiftedTableau:
    order = shape.cells_reading
    pos_of = {}
    for idx, cell in enumerate(order):
        pos_of[std_entries[cell]] = idx
    codes = [0] * len(order)
    for v, group in itertools.groupby(range(1, len(order) + 1), key=lambda m: values[m - 1]):
        block = list(group)
        q = [pos_of[m] for m in block]
        j = prime_split(q)
        if j is None:
            raise InvariantError(f"no canonical prime split for positions {q}")
        for t, m in enumerate(block):
            codes[pos_of[m]] = letter(v, t < j)
    try:
        return ShiftedTableau.from_word(shape, tuple(codes))
    except ValueError as exc:
        raise InvariantError(f"de-standardization is not semistandard: {exc}") from exc


# ---------------------------------------------------------------------------
# Standard slides (distinct entries; min fills inner holes, max outer ones)

def _inner_slide_std(entries, r, c):
    while True:
        east = entries.get((r, c + 1))
        south = entries.get((r + 1, c))
        if east is None and south is None:
            return r, c
        if south is None or (east is not None and east < south):
            entries[(r, c)] = east
            del entries[(r, c + 1)]
            c += 1
        else:
            entries[(r, c)] = south
            del entries[(r + 1, c)]
            r += 1


def _outer_slide_std(entries, r, c):
    while True:
        west = entries.get((r, c - 1))
        north = entries.get((r - 1, c))
        if west is None and north is None:
            return r, c
        if north is None or (west is not None and west > north):
            entries[(r, c)] = west
            del entries[(r, c - 1)]
            c -= 1
        else:
            entries[(r, c)] = north
            del entries[(r - 1, c)]
            r -= 1


class _SlideState:
    """Mutable standard tableau used while a batch of slides runs."""

    __slots__ = ("entries", "outer", "inner", "values", "steps")

    def __init__(self, T: ShiftedTableau):
        self.entries, self.values = _standardize(T)
        self.outer = T.shape.outer
        self.inner = T.shape.inner
        self.steps = []

    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    def slide_inner(self, corner):
        if corner not in inner_corners(self.shape()):
            raise ValueError(f"{corner} is not an inner corner of {self.shape()}")
        end = _inner_slide_std(self.entries, *corner)
        self.inner = _remove_part_cell(self.inner, corner[0])
        self.outer = _remove_part_cell(self.outer, end[0])
        self.steps.append(("inner", corner, end))
        return end

    def slide_outer(self, corner):
        if corner not in addable_cells(self.outer):
            raise ValueError(f"{corner} cannot start an outer slide on {self.outer}")
        end = _outer_slide_std(self.entries, *corner)
        self.outer = _add_part_cell(self.outer, corner[0])
        self.inner = _add_part_cell(self.inner, end[0])
        self.steps.append(("outer", corner, end))
        return end

    def finish(self) -> ShiftedTableau:
        return _destandardize(self.shape(), self.entries, self.values)


# ---------------------------------------------------------------------------
# Public slide operations

def inner_slide(T: ShiftedTableau, corner) -> ShiftedTableau:
    """One inner jeu de taquin slide starting at the given inner corner."""
    state = _SlideState(T)
    state.slide_inner(tuple(corner))
    return state.finish()


def outer_slide(T: ShiftedTableau, corner) -> ShiftedTableau:
    """One outer jeu de taquin slide starting at the given addable cell."""
    state = _SlideState(T)
    state.slide_outer(tuple(corner))
    return state.finish()


def rectify(T: ShiftedTableau, rng: random.Random = None):
    """Slide to a straight shape; returns (rectified tableau, record).

    The result does not depend on the corner order; when rng is given the
    corners are picked at random from it, otherwise deterministically.
    """
    state = _SlideState(T)
    while state.inner:
        corners = sorted(inner_corners(state.shape()))
        corner = corners[0] if rng is None else rng.choice(corners)
        state.slide_inner(corner)
    return state.finish(), SlideRecord(state.steps)


def unrectify(S: ShiftedTableau, record: SlideRecord) -> ShiftedTableau:
    """Undo a rectification by replaying its record backwards."""
    if any(kind != "inner" for kind, _, _ in record.steps):
        raise ValueError("unrectify expects a record of inner slides")
    state = _SlideState(S)
    for kind, corner, end in record.reversed().steps:
        got = state.slide_outer(corner)
        if got != end:
            raise ValueError(
                f"record does not match tableau: outer slide from {corner} "
                f"ended at {got}, expected {end}"
            )
    return state.finish()


def replay(T: ShiftedTableau, record: SlideRecord):
    """Apply the record's slides, by kind and start corner, to a tableau.

    Returns (result, record-with-actual-end-cells); used both to check that
    records reproduce their targets and to transport slide sequences across
    dual equivalence classes.
    """
    state = _SlideState(T)
    for kind, corner, _ in record.steps:
        if kind == "inner":
            state.slide_inner(corner)
        else:
            state.slide_outer(corner)
    return state.finish(), SlideRecord(state.steps)


# ---------------------------------------------------------------------------
# Words as tableaux

def strip_tableau(w: Word) -> ShiftedTableau:
    """Anti-diagonal strip tableau whose reading word is w.

    One cell per letter, no two cells sharing a row or column, so every
    canonical word embeds.
    """
    N = len(w)
    if N == 0:
        return EMPTY_TABLEAU
    outer = StrictPartition(2 * (N - r) + 1 for r in range(1, N + 1))
    inner = StrictPartition(2 * (N - r) for r in range(1, N))
    shape = SkewShape(outer, inner)
    entries = {(r, 2 * N - r): w.codes[N - r] for r in range(1, N + 1)}
    return ShiftedTableau(shape, entries)


def rectify_word(w: Word) -> Word:
    """Reading word of the rectification of any tableau with reading word w."""
    return rectify(strip_tableau(w))[0].reading_word(w.n)


# ---------------------------------------------------------------------------
# Yamanouchi and ballot tests

def yamanouchi(nu) -> ShiftedTableau:
    """The tableau of shape nu whose i-th row is filled with i."""
    nu = StrictPartition(nu)
    shape = SkewShape(nu)
    entries = {(r, c): letter(r) for (r, c) in shape.cells_reading}
    return ShiftedTableau(shape, entries)


def is_lrs(T: ShiftedTableau) -> bool:
    """True when T rectifies to a Yamanouchi tableau."""
    R = rectify(T)[0]
    return R == yamanouchi(R.shape.outer)


# ---------------------------------------------------------------------------
# Shifted Knuth moves

def _swap(codes, i, j):
    lst = list(codes)
    lst[i], lst[j] = lst[j], lst[i]
    return canonicalize_codes(lst)


def knuth_neighbors(w: Word) -> frozenset:
    """Words one Knuth move away from w.

    Triple moves compare letters through the standardization; the first-two
    moves swap the leading letters or toggle the prime of the second letter
    when it repeats the first value.  Outputs are canonicalized.
    """
    codes = w.codes
    L = len(codes)
    std = standardize_codes(codes)
    results = set()
    for j in range(L - 2):
        s0, s1, s2 = std[j], std[j + 1], std[j + 2]
        if min(s1, s2) < s0 < max(s1, s2):
            results.add(_swap(codes, j + 1, j + 2))
        if min(s0, s1) < s2 < max(s0, s1):
            results.add(_swap(codes, j, j + 1))
    if L >= 2:
        results.add(_swap(codes, 0, 1))
        if letter_value(codes[0]) == letter_value(codes[1]):
            toggled = list(codes)
            toggled[1] += 1 if toggled[1] % 2 else -1
            results.add(canonicalize_codes(toggled))
    results.discard(codes)
    return frozenset(Word(c, w.n) for c in results)


def knuth_equivalent(w: Word, v: Word, max_len: int = 8) -> bool:
    """Connectivity of w and v under the Knuth moves (bidirectional BFS)."""
    if len(w) > max_len or len(v) > max_len:
        raise ValueError(f"word length exceeds the Knuth search cap {max_len}")
    if w.n != v.n:
        v = v.with_n(w.n)
    if w == v:
        return True
    if len(w) != len(v) or w.weight() != v.weight():
        return False
    seen_a, seen_b = {w}, {v}
    front_a, front_b = {w}, {v}
    while front_a and front_b:
        if len(front_a) > len(front_b):
            seen_a, seen_b = seen_b, seen_a
            front_a, front_b = front_b, front_a
        nxt = set()
        for word in front_a:
            for u in knuth_neighbors(word):
                if u in seen_b:
                    return True
                if u not in seen_a:
                    seen_a.add(u)
                    nxt.add(u)
        front_a = nxt
    return False
