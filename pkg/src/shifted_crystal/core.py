"""Strict partitions, shifted skew shapes, primed words and shifted tableaux.

Cells are 1-based (row, column) pairs; row r of a shifted shape occupies
columns r .. r + outer_r - 1, so the leftmost possible cell of row r sits
on the main diagonal (r, r).  Letters come from the primed alphabet
1' < 1 < 2' < 2 < ... and are encoded as integers: 2v - 1 for a primed v,
2v for an unprimed v, so integer order coincides with alphabet order.

Words and tableaux are stored in canonical form (the first letter of each
value in reading order is unprimed); non-canonical fillings exist only
transiently inside operations and are normalized before they escape.
"""

import functools
from collections import Counter

__all__ = [
    "InvariantError",
    "letter",
    "letter_value",
    "is_primed",
    "letter_str",
    "parse_letter",
    "StrictPartition",
    "SkewShape",
    "EMPTY_PARTITION",
    "EMPTY_SHAPE",
    "Word",
    "canonicalize",
    "canonicalize_codes",
    "standardize_codes",
    "prime_split",
    "ShiftedTableau",
    "EMPTY_TABLEAU",
    "enumerate_tableaux",
    "splice",
    "strict_partitions_of",
    "strict_partitions_inside",
]


class InvariantError(RuntimeError):
    """A structural fact the theory guarantees failed to hold in practice."""


# ---------------------------------------------------------------------------
# Letters

def letter(value: int, primed: bool = False) -> int:
    """Encode a primed-alphabet letter as an integer."""
    if value < 1:
        raise ValueError(f"letter value must be positive, got {value}")
    return 2 * value - 1 if primed else 2 * value


def letter_value(code: int) -> int:
    return (code + 1) // 2


def is_primed(code: int) -> bool:
    return code % 2 == 1


def letter_str(code: int) -> str:
    v = (code + 1) // 2
    return f"{v}'" if code % 2 else str(v)


def parse_letter(token: str) -> int:
    token = token.strip()
    primed = token.endswith("'")
    if primed:
        token = token[:-1]
    try:
        value = int(token)
    except ValueError:
        raise ValueError(f"cannot parse letter {token!r}") from None
    return letter(value, primed)


# ---------------------------------------------------------------------------
# Strict partitions

@functools.total_ordering
class StrictPartition:
    """A strictly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, StrictPartition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise ValueError(f"parts not strictly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("StrictPartition is immutable")

    @classmethod
    def parse(cls, text: str) -> "StrictPartition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def part(self, r: int) -> int:
        """The r-th part, 1-based, zero beyond the last row."""
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def contains(self, other: "StrictPartition") -> bool:
        other = StrictPartition(other)
        return len(other) <= len(self) and all(
            o <= s for o, s in zip(other.parts, self.parts)
        )

    def complement(self, m: int) -> "StrictPartition":
        """Complement inside the stair (m, m-1, ..., 1).

        Reflecting the unused cells of the stair through its anti-diagonal
        turns the complement into the strict partition whose part set is
        {1..m} minus the part set of self.
        """
        if self.parts and self.parts[0] > m:
            raise ValueError(f"{self} does not fit in the stair of width {m}")
        present = set(self.parts)
        return StrictPartition(sorted((v for v in range(1, m + 1) if v not in present), reverse=True))

    def __eq__(self, other):
        if isinstance(other, StrictPartition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __lt__(self, other):
        return self.parts < StrictPartition(other).parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return f"StrictPartition({self.parts})"


EMPTY_PARTITION = StrictPartition()


def strict_partitions_of(total: int):
    """All strict partitions of the given size, largest part first."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first - 1):
                yield (first,) + rest

    for parts in rec(total, total):
        yield StrictPartition(parts)


def strict_partitions_inside(bound) -> list:
    """All strict partitions contained in the given strict partition."""
    bound = StrictPartition(bound)

    def rec(r, cap):
        if r > len(bound):
            yield ()
            return
        yield ()
        for first in range(min(cap, bound.part(r)), 0, -1):
            for rest in rec(r + 1, first - 1):
                yield (first,) + rest

    return sorted({StrictPartition(p) for p in rec(1, bound.part(1))})


# ---------------------------------------------------------------------------
# Skew shifted shapes

class SkewShape:
    """A shifted skew shape outer/inner with precomputed cell data."""

    __slots__ = ("outer", "inner", "cells_reading", "cell_set", "_hash")

    def __init__(self, outer, inner=EMPTY_PARTITION):
        outer = StrictPartition(outer)
        inner = StrictPartition(inner)
        if not outer.contains(inner):
            raise ValueError(f"inner shape {inner} not contained in outer {outer}")
        cells = []
        for r in range(len(outer), 0, -1):
            for c in range(r + inner.part(r), r + outer.part(r)):
                cells.append((r, c))
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "cells_reading", tuple(cells))
        object.__setattr__(self, "cell_set", frozenset(cells))
        object.__setattr__(self, "_hash", hash((outer.parts, inner.parts)))

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        text = text.strip()
        if "/" in text:
            left, right = text.split("/", 1)
            return cls(StrictPartition.parse(left), StrictPartition.parse(right))
        return cls(StrictPartition.parse(text))

    @property
    def size(self) -> int:
        return len(self.cells_reading)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_span(self, r: int):
        """Columns (first, last) of the filled cells of row r; None if empty."""
        lo = r + self.inner.part(r)
        hi = r + self.outer.part(r) - 1
        return (lo, hi) if lo <= hi else None

    def __contains__(self, cell):
        return cell in self.cell_set

    def __eq__(self, other):
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"{self.outer}/{self.inner}"

    def __repr__(self):
        return f"SkewShape({self.outer.parts}, {self.inner.parts})"


EMPTY_SHAPE = SkewShape(EMPTY_PARTITION)


# ---------------------------------------------------------------------------
# Words

def canonicalize_codes(codes) -> tuple:
    """Unprime the leftmost letter of each value."""
    seen = set()
    out = []
    for x in codes:
        v = (x + 1) // 2
        if v not in seen:
            seen.add(v)
            x = 2 * v
        out.append(x)
    return tuple(out)


def standardize_codes(codes) -> tuple:
    """Standardization numbers, 1-based, one per position.

    Letters are numbered from least to greatest; amongst equal letters the
    primed copies are taken right to left, the unprimed ones left to right.
    """
    order = sorted(
        range(len(codes)),
        key=lambda j: (codes[j], -j if codes[j] % 2 else j),
    )
    std = [0] * len(codes)
    for rank, j in enumerate(order, start=1):
        std[j] = rank
    return tuple(std)


def prime_split(positions):
    """How many letters of an equal-value block are primed.

    positions lists, by standardization number, the word positions of the
    block.  A split into j primed then k - j unprimed letters is valid when
    the primed positions decrease, the unprimed ones increase, and the
    leftmost occurrence is unprimed.  Returns the unique valid j, or None
    when no split exists (the block cannot be realized canonically).
    """
    k = len(positions)
    valid = []
    for j in range(k):
        pre, post = positions[:j], positions[j:]
        if any(pre[t] <= pre[t + 1] for t in range(j - 1)):
            continue
        if any(post[t] >= post[t + 1] for t in range(k - j - 1)):
            continue
        if j and post[0] > pre[-1]:
            continue
        valid.append(j)
    if len(valid) > 1:
        raise InvariantError(f"prime split not unique: {positions} -> {valid}")
    return valid[0] if valid else None


class Word:
    """A word over the primed alphabet, stored in canonical form."""

    __slots__ = ("codes", "n", "_hash")

    def __init__(self, codes=(), n=None):
        codes = canonicalize_codes(tuple(codes))
        maxval = max((letter_value(x) for x in codes), default=0)
        if n is None:
            n = maxval
        elif maxval > n:
            raise ValueError(f"letter value {maxval} out of range for n={n}")
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "_hash", hash((codes, n)))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str, n=None) -> "Word":
        toks = text.split()
        return cls((parse_letter(t) for t in toks), n)

    def letters(self):
        return tuple((letter_value(x), is_primed(x)) for x in self.codes)

    def weight(self) -> tuple:
        counts = [0] * self.n
        for x in self.codes:
            counts[letter_value(x) - 1] += 1
        return tuple(counts)

    def standardize(self) -> tuple:
        return standardize_codes(self.codes)

    def with_n(self, n: int) -> "Word":
        return Word(self.codes, n)

    def __len__(self):
        return len(self.codes)

    def __eq__(self, other):
        return isinstance(other, Word) and self.codes == other.codes and self.n == other.n

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(letter_str(x) for x in self.codes)

    def __repr__(self):
        return f"Word({str(self)!r}, n={self.n})"


def canonicalize(letters, n=None) -> Word:
    """Canonical representative of a string of letters.

    Accepts a Word, an iterable of integer codes, or a whitespace separated
    string such as "1 2' 2".
    """
    if isinstance(letters, Word):
        return letters if n is None else letters.with_n(n)
    if isinstance(letters, str):
        return Word.parse(letters, n)
    return Word(letters, n)


# ---------------------------------------------------------------------------
# Shifted tableaux

class ShiftedTableau:
    """A semistandard shifted skew tableau in canonical form."""

    __slots__ = ("shape", "entries", "word_codes", "_hash")

    def __init__(self, shape: SkewShape, entries: dict, validate: bool = True):
        entries = dict(entries)
        word = tuple(entries[cell] for cell in shape.cells_reading) \
            if len(entries) == shape.size and all(c in entries for c in shape.cells_reading) \
            else None
        if word is None:
            raise ValueError("entries do not exactly cover the shape")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "word_codes", word)
        object.__setattr__(self, "_hash", hash((shape, word)))
        if validate:
            self.check()

    def __setattr__(self, name, value):
        raise AttributeError("ShiftedTableau is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_word(cls, shape: SkewShape, codes, validate=True) -> "ShiftedTableau":
        codes = tuple(codes)
        if len(codes) != shape.size:
            raise ValueError("word length does not match shape size")
        return cls(shape, dict(zip(shape.cells_reading, codes)), validate)

    @classmethod
    def from_rows(cls, rows, inner=EMPTY_PARTITION) -> "ShiftedTableau":
        """Build from per-row letter lists (top row first), plus inner shape."""
        inner = StrictPartition(inner)
        parsed = []
        for row in rows:
            if isinstance(row, str):
                row = [parse_letter(t) for t in row.split()]
            else:
                row = [x if isinstance(x, int) else parse_letter(x) for x in row]
            parsed.append(row)
        outer = StrictPartition(
            tuple(inner.part(r) + len(parsed[r - 1]) for r in range(1, len(parsed) + 1))
        )
        shape = SkewShape(outer, inner)
        entries = {}
        for r, row in enumerate(parsed, start=1):
            for k, code in enumerate(row):
                entries[(r, r + inner.part(r) + k)] = code
        return cls(shape, entries)

    @classmethod
    def parse(cls, shape_text: str, filling_text: str) -> "ShiftedTableau":
        shape = SkewShape.parse(shape_text)
        chunks = [chunk.strip() for chunk in filling_text.split("/")]
        if len(chunks) != len(shape.outer):
            raise ValueError(
                f"expected {len(shape.outer)} rows in filling, got {len(chunks)}"
            )
        entries = {}
        for r, chunk in enumerate(chunks, start=1):
            toks = chunk.split()
            span = shape.row_span(r)
            expected = 0 if span is None else span[1] - span[0] + 1
            if len(toks) != expected:
                raise ValueError(f"row {r} expects {expected} cells, got {len(toks)}")
            for k, tok in enumerate(toks):
                entries[(r, span[0] + k)] = parse_letter(tok)
        return cls(shape, entries)

    # -- invariants ----------------------------------------------------------

    def check(self):
        rows_primed = {}
        cols_unprimed = {}
        for (r, c), x in self.entries.items():
            if x < 1:
                raise ValueError(f"bad letter code {x}")
            v, p = letter_value(x), is_primed(x)
            west = self.entries.get((r, c - 1))
            if west is not None and west > x:
                raise ValueError(f"row {r} decreasing at column {c}")
            north = self.entries.get((r - 1, c))
            if north is not None and north > x:
                raise ValueError(f"column {c} decreasing at row {r}")
            if p:
                key = (r, v)
                if key in rows_primed:
                    raise ValueError(f"two {v}' in row {r}")
                rows_primed[key] = True
            else:
                key = (c, v)
                if key in cols_unprimed:
                    raise ValueError(f"two unprimed {v} in column {c}")
                cols_unprimed[key] = True
        if self.word_codes != canonicalize_codes(self.word_codes):
            raise ValueError("reading word is not in canonical form")
        return self

    # -- accessors -----------------------------------------------------------

    def entry(self, r: int, c: int):
        return self.entries.get((r, c))

    def reading_word(self, n=None) -> Word:
        return Word(self.word_codes, n)

    def weight(self, n=None) -> tuple:
        return self.reading_word(n).weight()

    @property
    def size(self) -> int:
        return self.shape.size

    def max_value(self) -> int:
        return max((letter_value(x) for x in self.word_codes), default=0)

    # -- interval restriction and relabelling --------------------------------

    def value_boundary(self, v: int) -> StrictPartition:
        """Outer boundary of the sub-shape holding letters of value <= v."""
        parts = []
        for r in range(1, len(self.shape.outer) + 1):
            span = self.shape.row_span(r)
            last = self.shape.inner.part(r)
            if span is not None:
                for c in range(span[0], span[1] + 1):
                    if letter_value(self.entries[(r, c)]) <= v:
                        last = c - r + 1
                    else:
                        break
            parts.append(last)
        try:
            return StrictPartition(parts)
        except ValueError as exc:
            raise InvariantError(f"letters <= {v} do not form a shape: {exc}") from exc

    def restrict(self, p: int, q: int) -> "ShiftedTableau":
        """Sub-tableau on the letters with value in [p, q], re-canonicalized."""
        if p > q:
            return EMPTY_TABLEAU
        sub = {
            cell: x for cell, x in self.entries.items()
            if p <= letter_value(x) <= q
        }
        if not sub:
            return EMPTY_TABLEAU
        outer = self.value_boundary(q)
        inner = self.value_boundary(p - 1) if p > 1 else self.shape.inner
        shape = SkewShape(outer, inner)
        if shape.cell_set != frozenset(sub):
            raise InvariantError("interval restriction does not match its boundary")
        return ShiftedTableau.from_word(
            shape, canonicalize_codes(tuple(sub[c] for c in shape.cells_reading))
        )

    def relabel(self, shift: int) -> "ShiftedTableau":
        """Shift every letter value by a constant, keeping primes."""
        if shift == 0:
            return self
        codes = tuple(x + 2 * shift for x in self.word_codes)
        if any(x < 1 for x in codes):
            raise ValueError("relabel would produce non-positive values")
        return ShiftedTableau.from_word(self.shape, codes)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ShiftedTableau)
            and self.shape == other.shape
            and self.word_codes == other.word_codes
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        rows = []
        for r in range(1, len(self.shape.outer) + 1):
            span = self.shape.row_span(r)
            if span is None:
                rows.append("")
            else:
                rows.append(" ".join(letter_str(self.entries[(r, c)])
                                     for c in range(span[0], span[1] + 1)))
        return " / ".join(rows)

    def __repr__(self):
        return f"ShiftedTableau({self.shape!r}, {str(self)!r})"


EMPTY_TABLEAU = ShiftedTableau(EMPTY_SHAPE, {})


def canonicalize_filling(shape: SkewShape, entries: dict) -> ShiftedTableau:
    """Rebuild a tableau from a filling, normalizing to canonical form."""
    codes = canonicalize_codes(tuple(entries[c] for c in shape.cells_reading))
    return ShiftedTableau.from_word(shape, codes)


# ---------------------------------------------------------------------------
# Enumeration

@functools.lru_cache(maxsize=None)
def _enumerate_cached(outer_parts, inner_parts, n):
    shape = SkewShape(StrictPartition(outer_parts), StrictPartition(inner_parts))
    cells = shape.cells_reading
    if not cells:
        return (EMPTY_TABLEAU if shape == EMPTY_SHAPE
                else ShiftedTableau(shape, {}),)
    results = []
    entries = {}
    value_seen = Counter()
    row_primed = set()
    col_unprimed = set()

    def place(idx):
        if idx == len(cells):
            results.append(ShiftedTableau(shape, entries, validate=False))
            return
        r, c = cells[idx]
        west = entries.get((r, c - 1))
        below = entries.get((r + 1, c))
        lo = west if west is not None else 1
        hi = below if below is not None else 2 * n
        for code in range(lo, hi + 1):
            v = (code + 1) // 2
            if v > n:
                break
            if code % 2:
                if not value_seen[v] or (r, v) in row_primed:
                    continue
                mark = (r, v)
                row_primed.add(mark)
            else:
                if (c, v) in col_unprimed:
                    continue
                mark = (c, v)
                col_unprimed.add(mark)
            entries[(r, c)] = code
            value_seen[v] += 1
            place(idx + 1)
            value_seen[v] -= 1
            del entries[(r, c)]
            (row_primed if code % 2 else col_unprimed).discard(mark)

    place(0)
    return tuple(results)


def enumerate_tableaux(shape: SkewShape, n: int) -> tuple:
    """All canonical semistandard fillings of the shape over [n]'.

    Deterministic: sorted lexicographically by reading word.
    """
    if n < 0:
        raise ValueError("alphabet bound must be non-negative")
    return _enumerate_cached(shape.outer.parts, shape.inner.parts, n)


# ---------------------------------------------------------------------------
# Splicing

def _shape_from_cells(cells):
    """Reconstruct a skew shape from a bare cell set.

    Rows without cells are interpolated minimally; callers that care about
    empty-row bookkeeping should pass the target shape to splice instead.
    """
    if not cells:
        return EMPTY_SHAPE
    by_row = {}
    for (r, c) in cells:
        by_row.setdefault(r, []).append(c)
    nrows = max(by_row)
    outer = [0] * nrows
    inner = [0] * nrows
    for r in range(nrows, 0, -1):
        if r in by_row:
            cs = sorted(by_row[r])
            if cs != list(range(cs[0], cs[-1] + 1)):
                raise ValueError(f"cells of row {r} are not contiguous")
            inner[r - 1] = cs[0] - r
            outer[r - 1] = cs[-1] - r + 1
        else:
            below = max(outer[r], inner[r]) if r < nrows else 0
            inner[r - 1] = outer[r - 1] = below + 1
    return SkewShape(StrictPartition(outer), StrictPartition(inner))


def splice(parts, shape: SkewShape = None) -> ShiftedTableau:
    """Union of tableaux on disjoint cell sets, re-canonicalized.

    The parts must occupy pairwise disjoint cells whose union is a valid
    skew shifted shape; semistandardness across the seams is enforced.
    """
    entries = {}
    for part in parts:
        for cell, x in part.entries.items():
            if cell in entries:
                raise ValueError(f"overlapping cell {cell} in splice")
            entries[cell] = x
    if shape is None:
        shape = _shape_from_cells(entries)
    elif shape.cell_set != frozenset(entries):
        raise ValueError("spliced cells do not cover the requested shape")
    try:
        return canonicalize_filling(shape, entries)
    except ValueError as exc:
        raise ValueError(f"splice produced a non-semistandard filling: {exc}") from exc
