"""Classification and separation of error pairs on equal-length words.

Two equal-length words that share a common corruption (s deletions plus r
substitutions away from each) admit a monotone alignment whose unmatched and
mismatched positions are the errors.  When all error positions are pairwise
far apart, each error has a well-defined local type and type value: the
change it causes in the adjacent-pair count within a three-symbol window.
When errors sit too close together, a matched filler word can be spliced
into both sequences at a cut that no matched pair crosses; this pulls the
errors apart while preserving the adjacency-count difference exactly and
embedding the old profile difference into the new one as a subsequence.

All positions below are 1-based, matching the convention used by error
patterns and reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, pad

SUB = "sub"
DEL_OVER = "del_over"
DEL_UNDER = "del_under"

_VALUE_SETS = {SUB: (-2, 0, 2), DEL_OVER: (0, 2), DEL_UNDER: (-2, 0)}


class AlignmentError(ValueError):
    """An alignment is inconsistent with the words it claims to relate."""


class SeparationError(ValueError):
    """Error positions are too close for the requested operation."""


class NoRelationError(ValueError):
    """No deletion/substitution relation within the supported budget."""


class RoundBudgetError(RuntimeError):
    """Separation did not converge within the round budget."""


@dataclass(frozen=True)
class ErrorTypeValue:
    """One classified error: its kind, value, and own-sequence position."""

    kind: str
    value: int
    position: int

    def __post_init__(self) -> None:
        if self.kind not in _VALUE_SETS:
            raise ValueError(f"unknown error kind {self.kind!r}")
        if self.value not in _VALUE_SETS[self.kind]:
            raise ValueError(f"value {self.value} invalid for kind {self.kind}")


@dataclass(frozen=True)
class Alignment:
    """Monotone matching between two equal-length words U and V.

    ``ops`` consumes both words left to right: ("match", u, v) and
    ("sub", u, v) consume one position of each (a sub marks the pair as a
    substitution and may carry equal symbols, the trivial case), ("del_u", u)
    consumes a position of U only, ("del_v", v) one of V only.
    """

    ops: tuple[tuple, ...]

    def matched_pairs(self) -> list[tuple[int, int]]:
        return [(op[1], op[2]) for op in self.ops if op[0] in ("match", "sub")]

    def sub_positions(self) -> list[int]:
        return [op[1] for op in self.ops if op[0] == "sub"]

    def dels_u(self) -> list[int]:
        return [op[1] for op in self.ops if op[0] == "del_u"]

    def dels_v(self) -> list[int]:
        return [op[1] for op in self.ops if op[0] == "del_v"]


def check_alignment(u: Word, v: Word, alignment: Alignment) -> None:
    """Raise AlignmentError unless the alignment consumes ``u`` and ``v``
    exactly once each, in order, with equal symbols on plain matches."""
    if len(u) != len(v):
        raise AlignmentError("aligned words must have equal length")
    next_u = next_v = 1
    for op in alignment.ops:
        kind = op[0]
        if kind in ("match", "sub"):
            _, a, b = op
            if a != next_u or b != next_v:
                raise AlignmentError(f"op {op} breaks monotone consumption")
            if kind == "match" and u[a - 1] != v[b - 1]:
                raise AlignmentError(f"match at ({a}, {b}) joins unequal symbols")
            next_u += 1
            next_v += 1
        elif kind == "del_u":
            if op[1] != next_u:
                raise AlignmentError(f"op {op} breaks monotone consumption")
            next_u += 1
        elif kind == "del_v":
            if op[1] != next_v:
                raise AlignmentError(f"op {op} breaks monotone consumption")
            next_v += 1
        else:
            raise AlignmentError(f"unknown op kind {kind!r}")
    if next_u != len(u) + 1 or next_v != len(v) + 1:
        raise AlignmentError("alignment does not consume both words exactly")


def alignment_from_positions(
    u: Word, v: Word, positions: tuple[int, ...] | list[int], s: int, r: int
) -> Alignment:
    """Alignment induced by error positions given as the usual ordered block
    (s deletions in U, then 2r substitutions in U, then s deletions in V)."""
    dels_u, subs_u, dels_v = _split_positions(u, v, positions, s, r)
    n = len(u)
    remaining_u = [p for p in range(1, n + 1) if p not in dels_u]
    remaining_v = [p for p in range(1, n + 1) if p not in dels_v]
    sub_set = set(subs_u)
    ops: list[tuple] = []
    du = dv = 0
    dels_u_sorted = sorted(dels_u)
    dels_v_sorted = sorted(dels_v)
    for a, b in zip(remaining_u, remaining_v):
        while du < len(dels_u_sorted) and dels_u_sorted[du] < a:
            ops.append(("del_u", dels_u_sorted[du]))
            du += 1
        while dv < len(dels_v_sorted) and dels_v_sorted[dv] < b:
            ops.append(("del_v", dels_v_sorted[dv]))
            dv += 1
        ops.append(("sub" if a in sub_set else "match", a, b))
    return Alignment(tuple(ops))


def _split_positions(u, v, positions, s, r):
    if len(u) != len(v):
        raise ValueError("words of a pair must have equal length")
    positions = tuple(positions)
    if len(positions) != 2 * s + 2 * r:
        raise ValueError(f"expected {2 * s + 2 * r} positions, got {len(positions)}")
    n = len(u)
    for p in positions:
        if not 2 <= p <= n - 1:
            raise ValueError(f"position {p} outside the interior [2, {n - 1}]")
    dels_u = positions[:s]
    subs_u = positions[s : s + 2 * r]
    dels_v = positions[s + 2 * r :]
    if len(set(dels_u) | set(subs_u)) != s + 2 * r:
        raise ValueError("U-side positions must be distinct")
    if len(set(dels_v)) != s:
        raise ValueError("V-side positions must be distinct")
    return dels_u, subs_u, dels_v


def is_good_pair(u: Word, v: Word, positions, s: int, r: int) -> bool:
    """True iff the positions are pairwise at distance >= 2s+1 and deleting /
    substituting U at them matches V with its own deletions removed."""
    dels_u, subs_u, dels_v = _split_positions(u, v, positions, s, r)
    values = sorted(positions)
    for a, b in zip(values, values[1:]):
        if b - a < 2 * s + 1:
            return False
    sub_set = set(subs_u)
    del_u_set = set(dels_u)
    del_v_set = set(dels_v)
    kept_u = [p for p in range(1, len(u) + 1) if p not in del_u_set]
    kept_v = [p for p in range(1, len(v) + 1) if p not in del_v_set]
    for a, b in zip(kept_u, kept_v):
        if a not in sub_set and u[a - 1] != v[b - 1]:
            return False
    return True


def _f2(a: int, b: int) -> int:
    return int(a != b)


def _f3(a: int, b: int, c: int) -> int:
    return int(a != b) + int(b != c)


def classify_errors(u: Word, v: Word, alignment: Alignment) -> list[ErrorTypeValue]:
    """Type and type value of every error, ordered by own-sequence position.

    Substitutions compare the three-symbol window around the error before and
    after writing the matched symbol; the left neighbour is read through the
    matching because it may itself be a substitution.  Deletions compare the
    window against the two-symbol remainder on their own side.
    """
    check_alignment(u, v, alignment)
    dels_u = alignment.dels_u()
    dels_v = alignment.dels_v()
    subs = alignment.sub_positions()
    if len(dels_u) != len(dels_v):
        raise AlignmentError("a del/sub pair needs equally many deletions on each side")
    s = len(dels_u)
    entries = sorted(
        [(p, DEL_OVER) for p in dels_u]
        + [(p, SUB) for p in subs]
        + [(p, DEL_UNDER) for p in dels_v]
    )
    values = [p for p, _ in entries]
    for a, b in zip(values, values[1:]):
        if b - a < 2 * s + 1:
            raise SeparationError(
                f"error positions {a} and {b} are closer than {2 * s + 1}; windows overlap"
            )
    n = len(u)
    u_to_v = dict(alignment.matched_pairs())
    del_u_set = set(dels_u)
    del_v_set = set(dels_v)

    def tau_u(p: int) -> int:
        if p in del_u_set:
            raise SeparationError(f"U position {p} adjoins an error but is deleted")
        return v[u_to_v[p] - 1]

    out = []
    for p, kind in entries:
        if not 2 <= p <= n - 1:
            raise SeparationError(f"error position {p} outside the interior [2, {n - 1}]")
        if kind == SUB:
            left = tau_u(p - 1)
            e = _f3(left, u[p - 1], u[p]) - _f3(left, tau_u(p), u[p])
        elif kind == DEL_OVER:
            if p - 1 in del_u_set or p + 1 in del_u_set:
                raise SeparationError(f"deletion at U position {p} has a deleted neighbour")
            e = _f3(u[p - 2], u[p - 1], u[p]) - _f2(u[p - 2], u[p])
        else:
            if p - 1 in del_v_set or p + 1 in del_v_set:
                raise SeparationError(f"deletion at V position {p} has a deleted neighbour")
            e = _f2(v[p - 2], v[p]) - _f3(v[p - 2], v[p - 1], v[p])
        out.append(ErrorTypeValue(kind, e, p))
    return out


def pair_type(u: Word, v: Word, alignment: Alignment) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """The kinds and values of all errors in own-position order."""
    classified = classify_errors(u, v, alignment)
    return tuple(e.kind for e in classified), tuple(e.value for e in classified)


# --- segmentation ---------------------------------------------------------


class _PairState:
    """Mutable view of a word pair, its matching, and its error positions."""

    __slots__ = ("x", "y", "pairs", "subs", "dels_u", "dels_v")

    def __init__(self, x, y, pairs, subs, dels_u, dels_v):
        self.x = list(x)
        self.y = list(y)
        self.pairs = sorted(pairs)
        self.subs = sorted(subs)
        self.dels_u = sorted(dels_u)
        self.dels_v = sorted(dels_v)

    @classmethod
    def from_alignment(cls, u: Word, v: Word, alignment: Alignment) -> "_PairState":
        check_alignment(u, v, alignment)
        return cls(
            u,
            v,
            alignment.matched_pairs(),
            alignment.sub_positions(),
            alignment.dels_u(),
            alignment.dels_v(),
        )

    def alignment(self) -> Alignment:
        sub_set = set(self.subs)
        ops: list[tuple] = []
        du = dv = 0
        for a, b in self.pairs:
            while du < len(self.dels_u) and self.dels_u[du] < a:
                ops.append(("del_u", self.dels_u[du]))
                du += 1
            while dv < len(self.dels_v) and self.dels_v[dv] < b:
                ops.append(("del_v", self.dels_v[dv]))
                dv += 1
            ops.append(("sub" if a in sub_set else "match", a, b))
        return Alignment(tuple(ops))

    def error_entries(self) -> list[tuple[int, str]]:
        """Error positions tagged by owning side, sorted by (position, side)."""
        return sorted(
            [(p, "u") for p in self.dels_u]
            + [(p, "u") for p in self.subs]
            + [(p, "v") for p in self.dels_v]
        )

    def cut_ok(self, i: int, j: int) -> bool:
        if not (1 <= i <= len(self.x) - 1 and 1 <= j <= len(self.y) - 1):
            return False
        return all((a <= i and b <= j) or (a > i and b > j) for a, b in self.pairs)

    def filler(self, i: int, j: int) -> list[int]:
        x, y = self.x, self.y
        if i == j:
            return _meet_filler(x[i - 1], x[i], y[i - 1], y[i])
        if i < j:
            return x[i:j] + [y[j - 1]]
        return y[j:i] + [x[i - 1]]

    def apply_cut(self, i: int, j: int) -> list[int]:
        z = self.filler(i, j)
        length = len(z)
        self.x[i:i] = z
        self.y[j:j] = z
        shifted = [(a + length if a > i else a, b + length if b > j else b) for a, b in self.pairs]
        shifted.extend((i + t, j + t) for t in range(1, length + 1))
        self.pairs = sorted(shifted)
        self.subs = [p + length if p > i else p for p in self.subs]
        self.dels_u = [p + length if p > i else p for p in self.dels_u]
        self.dels_v = [p + length if p > j else p for p in self.dels_v]
        return z


def _meet_filler(xi: int, xi1: int, yi: int, yi1: int) -> list[int]:
    """Length-2 filler for a cut at matching indices, chosen so the splice
    changes the adjacency count of both sequences by the same amount."""
    if xi == yi:
        return [xi, xi]
    if xi1 == yi1:
        return [xi1, xi1]
    if xi == yi1 and yi == xi1:
        return [xi, xi]
    return [xi, yi]


def segment_once(x: Word, y: Word, alignment: Alignment, cut: tuple[int, int]) -> tuple[Word, Word]:
    """Splice the cut's filler into both words; lengths grow by the filler's.

    The cut (i, j) inserts after position i of ``x`` and after position j of
    ``y``; it is rejected unless every matched pair lies entirely on one side.
    """
    state = _PairState.from_alignment(x, y, alignment)
    i, j = cut
    if not state.cut_ok(i, j):
        raise SeparationError(f"cut ({i}, {j}) crosses a matched pair or is out of range")
    state.apply_cut(i, j)
    return Word(state.x), Word(state.y)


# --- canonical alignment search -------------------------------------------

_INF = 1 << 20


def _suffix_costs(x: Word, y: Word, s: int) -> list[list[list[int]]]:
    """g[i][j][d]: fewest mismatched pairs finishing the alignment after
    consuming i of x and j of y with d deletions taken from x (deletions and
    mismatches are restricted to interior positions)."""
    n = len(x)
    xb, yb = tuple(x), tuple(y)
    g = [[[_INF] * (s + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    g[n][n][s] = 0
    for i in range(n, -1, -1):
        gi = g[i]
        gi1 = g[i + 1] if i < n else None
        for j in range(n, -1, -1):
            for d in range(s, -1, -1):
                if i == n and j == n:
                    continue
                e = d - (i - j)
                if e < 0 or e > s:
                    continue
                best = _INF
                interior_u = 2 <= i + 1 <= n - 1
                if i < n and j < n:
                    if xb[i] == yb[j]:
                        best = gi1[j + 1][d]
                    elif interior_u:
                        best = 1 + gi1[j + 1][d]
                if i < n and d < s and interior_u:
                    best = min(best, gi1[j][d + 1])
                if j < n and e < s and 2 <= j + 1 <= n - 1:
                    best = min(best, gi[j + 1][d])
                gi[j][d] = best
    return g


def _reconstruct(x: Word, y: Word, s: int, g) -> list[tuple]:
    """Leftmost optimal alignment, preferring match > sub > del_u > del_v."""
    n = len(x)
    xb, yb = tuple(x), tuple(y)
    i = j = d = 0
    rem = g[0][0][0]
    ops: list[tuple] = []
    while i < n or j < n:
        if i < n and j < n and xb[i] == yb[j] and g[i + 1][j + 1][d] == rem:
            ops.append(("match", i + 1, j + 1))
            i += 1
            j += 1
            continue
        if (
            i < n
            and j < n
            and xb[i] != yb[j]
            and 2 <= i + 1 <= n - 1
            and g[i + 1][j + 1][d] == rem - 1
        ):
            ops.append(("sub", i + 1, j + 1))
            i += 1
            j += 1
            rem -= 1
            continue
        if i < n and d < s and 2 <= i + 1 <= n - 1 and g[i + 1][j][d + 1] == rem:
            ops.append(("del_u", i + 1))
            i += 1
            d += 1
            continue
        e = d - (i - j)
        if j < n and e < s and 2 <= j + 1 <= n - 1 and g[i][j + 1][d] == rem:
            ops.append(("del_v", j + 1))
            j += 1
            continue
        raise AssertionError("alignment reconstruction lost the optimal path")
    return ops


def _substitution_only_ops(x: Word, y: Word, r: int) -> list[tuple] | None:
    """Identity matching with subs at the mismatches, or None if more than
    2r mismatches or a mismatch at a non-interior position."""
    n = len(x)
    xb, yb = tuple(x), tuple(y)
    mismatches = [p + 1 for p in range(n) if xb[p] != yb[p]]
    if len(mismatches) > 2 * r:
        return None
    if mismatches and not 2 <= mismatches[0] <= mismatches[-1] <= n - 1:
        return None
    wrong = set(mismatches)
    return [("sub" if p in wrong else "match", p, p) for p in range(1, n + 1)]


_RELATION_ORDER = ((0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0))


def find_relation(
    x: Word, y: Word, s: int | None = None, r: int | None = None
) -> tuple[int, int, Alignment]:
    """A relation carrying ``x`` to ``y``: s interior deletions on each side
    plus 2r substitution pairs (trivial fills added to reach an even count).
    By default the smallest relation (s + r, then s) is chosen; passing s
    and/or r pins the shape.  Raises NoRelationError if nothing fits within
    s + r = 2."""
    if len(x) != len(y):
        raise ValueError("related words must have equal length")
    candidates = [
        (cs, cr)
        for cs, cr in _RELATION_ORDER
        if (s is None or cs == s) and (r is None or cr == r)
    ]
    tables: dict[int, list] = {}
    for cs, cr in candidates:
        if cs == 0:
            ops = _substitution_only_ops(x, y, cr)
            if ops is not None:
                return cs, cr, _with_trivial_fills(ops, 2 * cr, len(x))
            continue
        if cs not in tables:
            tables[cs] = _suffix_costs(x, y, cs)
        if tables[cs][0][0][0] <= 2 * cr:
            ops = _reconstruct(x, y, cs, tables[cs])
            return cs, cr, _with_trivial_fills(ops, 2 * cr, len(x))
    shape = "" if s is None and r is None else f" of shape (s={s}, r={r})"
    raise NoRelationError(
        f"no relation{shape} with at most two deletions+substitutions joins {x} and {y}"
    )


def _with_trivial_fills(ops: list[tuple], wanted: int, n: int) -> Alignment:
    have = sum(1 for op in ops if op[0] == "sub")
    if have > wanted:
        raise AssertionError("reconstruction used more substitutions than allowed")
    need = wanted - have
    if need:
        taken = {op[1] for op in ops if op[0] in ("sub", "del_u")}
        out = []
        for op in ops:
            if need and op[0] == "match" and 2 <= op[1] <= n - 1 and op[1] not in taken:
                out.append(("sub", op[1], op[2]))
                need -= 1
            else:
                out.append(op)
        ops = out
    if need:
        raise NoRelationError("not enough interior matches for trivial substitution fills")
    return Alignment(tuple(ops))


# --- full separation pipeline ----------------------------------------------


@dataclass(frozen=True)
class SegmentationRound:
    x_before: Word
    y_before: Word
    cut: tuple[int, int]
    filler: Word
    x_after: Word
    y_after: Word


@dataclass(frozen=True)
class Separation:
    """Outcome of pulling the errors of a word pair at least k apart."""

    u: Word
    v: Word
    s: int
    r: int
    dels_u: tuple[int, ...]
    subs_u: tuple[int, ...]
    dels_v: tuple[int, ...]
    alignment: Alignment
    rounds: tuple[SegmentationRound, ...]

    @property
    def positions(self) -> tuple[int, ...]:
        return self.dels_u + self.subs_u + self.dels_v


def _find_cut(state: _PairState, errors, m: int):
    """A cut keeping errors[:m] in place and shifting errors[m:], or None."""
    left, right = errors[:m], errors[m:]
    big = len(state.x)
    i_lo = max([p for p, side in left if side == "u"], default=1)
    i_hi = min([p for p, side in right if side == "u"], default=big) - 1
    j_lo = max([p for p, side in left if side == "v"], default=1)
    j_hi = min([p for p, side in right if side == "v"], default=big) - 1
    if i_lo > i_hi or j_lo > j_hi:
        return None
    for (a1, b1), (a2, b2) in zip(state.pairs, state.pairs[1:]):
        i = max(a1, i_lo)
        j = max(b1, j_lo)
        if i <= min(a2 - 1, i_hi) and j <= min(b2 - 1, j_hi):
            return i, j
    return None


def _next_cut(state: _PairState, k: int):
    """Cut widening the leftmost too-narrow gap between adjacent errors."""
    errors = state.error_entries()
    saw_violation = False
    for m in range(1, len(errors)):
        gap = errors[m][0] - errors[m - 1][0]
        if gap >= k:
            continue
        saw_violation = True
        cut = _find_cut(state, errors, m)
        if cut is None and errors[m - 1][0] == errors[m][0]:
            swapped = errors[:m - 1] + [errors[m], errors[m - 1]] + errors[m + 1 :]
            cut = _find_cut(state, swapped, m)
        if cut is not None:
            return cut
    if saw_violation:
        raise SeparationError(
            f"no matched cut separates errors {errors} in {Word(state.x)} / {Word(state.y)}"
        )
    return None


def separate_errors(
    x: Word,
    y: Word,
    k: int,
    round_budget: int | None = None,
    s: int | None = None,
    r: int | None = None,
) -> Separation:
    """Pad ``x`` and ``y``, find their smallest deletion/substitution
    relation (or the pinned one), and splice fillers until all error
    positions are pairwise at distance >= k.  Each round preserves the
    adjacency-count difference and never decreases the sign-preserving number
    of the profile difference."""
    if k < 1:
        raise ValueError("separation distance must be at least 1")
    if len(x) != len(y):
        raise ValueError("words must have equal length")
    big_x, big_y = pad(x), pad(y)
    s, r, alignment = find_relation(big_x, big_y, s, r)
    state = _PairState.from_alignment(big_x, big_y, alignment)
    budget = 4 * k if round_budget is None else round_budget
    rounds: list[SegmentationRound] = []
    while True:
        cut = _next_cut(state, k)
        if cut is None:
            break
        if len(rounds) >= budget:
            raise RoundBudgetError(f"separation exceeded the budget of {budget} rounds")
        x_before, y_before = Word(state.x), Word(state.y)
        z = state.apply_cut(*cut)
        rounds.append(
            SegmentationRound(x_before, y_before, cut, Word(z), Word(state.x), Word(state.y))
        )
    return Separation(
        u=Word(state.x),
        v=Word(state.y),
        s=s,
        r=r,
        dels_u=tuple(state.dels_u),
        subs_u=tuple(state.subs),
        dels_v=tuple(state.dels_v),
        alignment=state.alignment(),
        rounds=tuple(rounds),
    )
