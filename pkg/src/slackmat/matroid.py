"""Matroids given by their bases, with the flat/hyperplane machinery the
slack construction needs.  Only simple matroids are accepted (no loops, no
parallel pairs); non-matroids and non-simple inputs are rejected outright.

Elements live at positions 0..n-1 internally; a strictly increasing label
list (default 1..n, the common figure conventions also use 0..n-1) is kept
for display and I/O.
"""

from dataclasses import dataclass
from itertools import combinations
import json

from .fields import Field, QQ, parse_field
from .linalg import field_det, field_matrix_rank


class MatroidError(ValueError):
    pass


@dataclass(frozen=True)
class PointConfiguration:
    """A rank-(d+1) realization candidate: (d+1) x n matrix, column j = v_j."""

    field: Field
    entries: tuple  # tuple of rows, each a tuple of field elements

    def __post_init__(self):
        rows = tuple(tuple(self.field.coerce(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if len({len(r) for r in rows}) > 1:
            raise MatroidError("ragged matrix")

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0]) if self.entries else 0

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def rank(self):
        return field_matrix_rank(self.entries, self.field)

    def full_rank_form(self):
        """Row-reduce and drop zero rows: an r x n configuration with the
        same column matroid (row operations preserve column dependencies)."""
        field = self.field
        m = [list(row) for row in self.entries]
        rows, cols = len(m), len(m[0]) if m else 0
        rank = 0
        for c in range(cols):
            piv = next((r for r in range(rank, rows) if m[r][c] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = field.inv(m[rank][c])
            m[rank] = [field.mul(x, inv) for x in m[rank]]
            for r in range(rows):
                if r != rank and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[rank])]
            rank += 1
            if rank == rows:
                break
        return PointConfiguration(field, tuple(tuple(r) for r in m[:rank]))

    def to_json(self):
        return {
            "field": self.field.name,
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    @staticmethod
    def from_json(data):
        field = parse_field(data["field"])
        return PointConfiguration(field, tuple(tuple(row) for row in data["entries"]))


class Matroid:
    """Immutable matroid with eagerly validated bases and cached flats."""

    def __init__(self, n, rank, bases, labels=None, _skip_checks=False):
        self.n = n
        self.rank = rank
        if labels is None:
            labels = list(range(1, n + 1))
        if len(labels) != n or sorted(labels) != list(labels) or len(set(labels)) != n:
            raise MatroidError("labels must be strictly increasing and distinct")
        self.labels = tuple(labels)
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        self.bases = frozenset(frozenset(b) for b in bases)
        self._rank_cache = {}
        self._hyperplanes = None
        if not _skip_checks:
            self._validate()

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_bases(n, rank, bases, labels=None):
        """Bases given in label space."""
        m = Matroid(n, rank, [], labels, _skip_checks=True)
        pos_bases = {frozenset(m._pos[x] for x in b) for b in bases}
        return Matroid(n, rank, pos_bases, labels)

    @staticmethod
    def from_nonbases(n, rank, nonbases, labels=None):
        m = Matroid(n, rank, [], labels, _skip_checks=True)
        bad = {frozenset(m._pos[x] for x in b) for b in nonbases}
        for b in bad:
            if len(b) != rank:
                raise MatroidError("non-basis of wrong cardinality")
        all_r = {frozenset(c) for c in combinations(range(n), rank)}
        return Matroid(n, rank, all_r - bad, labels)

    @staticmethod
    def from_matrix(config: PointConfiguration, labels=None):
        """Column matroid of a matrix: bases are the column subsets of size
        equal to the matrix rank that reach it.  A (d+1) x n realization has
        full row rank; taller matrices (e.g. slack-matrix rows in k^h) are
        handled through the rank function."""
        r = config.rank()
        n = config.ncols
        field = config.field
        cols = [config.column(j) for j in range(n)]
        bases = set()
        square = r == config.nrows
        for sub in combinations(range(n), r):
            mat = [[cols[j][i] for j in sub] for i in range(config.nrows)]
            if square:
                ok = field_det(mat, field) != 0
            else:
                ok = field_matrix_rank(mat, field) == r
            if ok:
                bases.add(frozenset(sub))
        return Matroid(n, r, bases, labels)

    # -- validation -----------------------------------------------------------

    def _validate(self):
        if not self.bases:
            raise MatroidError("not a matroid: no bases")
        for b in self.bases:
            if len(b) != self.rank:
                raise MatroidError("not a matroid: basis of wrong cardinality")
            if not all(0 <= x < self.n for x in b):
                raise MatroidError("basis element outside the ground set")
        blist = list(self.bases)
        for b1 in blist:
            for b2 in blist:
                if b1 is b2:
                    continue
                for x in b1 - b2:
                    if not any(((b1 - {x}) | {y}) in self.bases for y in b2 - b1):
                        raise MatroidError("not a matroid: basis exchange fails")
        covered = set().union(*self.bases)
        if covered != set(range(self.n)):
            raise MatroidError("not simple: loops present (element in no basis)")
        if self.rank >= 2:
            for pair in combinations(range(self.n), 2):
                if self.rank_of(pair) < 2:
                    raise MatroidError("not simple: parallel pair present")
        elif self.n > 1:
            raise MatroidError("not simple: parallel pair present")

    # -- rank / closure ----------------------------------------------------------

    def rank_of(self, subset) -> int:
        """Matroid rank; subset in positions."""
        s = frozenset(subset)
        got = self._rank_cache.get(s)
        if got is None:
            got = max(len(s & b) for b in self.bases) if self.bases else 0
            self._rank_cache[s] = got
        return got

    def closure_of(self, subset) -> frozenset:
        s = frozenset(subset)
        r = self.rank_of(s)
        return s | {e for e in range(self.n) if e not in s and self.rank_of(s | {e}) == r}

    def is_basis(self, subset) -> bool:
        return frozenset(subset) in self.bases

    def is_independent(self, subset) -> bool:
        s = frozenset(subset)
        return self.rank_of(s) == len(s)

    @property
    def nonbases(self):
        """Dependent rank-subsets, sorted."""
        out = [frozenset(c) for c in combinations(range(self.n), self.rank)
               if frozenset(c) not in self.bases]
        return sorted(out, key=sorted)

    def hyperplanes(self):
        """All rank-(d) flats, deterministically ordered by content."""
        if self._hyperplanes is None:
            d = self.rank - 1
            seen = set()
            for sub in combinations(range(self.n), d):
                if self.rank_of(sub) == d:
                    seen.add(self.closure_of(sub))
            self._hyperplanes = sorted(seen, key=sorted)
        return list(self._hyperplanes)

    def independent_spanning_subsets(self, hyperplane):
        """Independent d-subsets of the hyperplane (each has closure = H),
        in lexicographic order."""
        d = self.rank - 1
        h = sorted(hyperplane)
        return [c for c in combinations(h, d) if self.rank_of(c) == d]

    # -- labels -----------------------------------------------------------------

    def label_of(self, pos):
        return self.labels[pos]

    def pos_of(self, label):
        return self._pos[label]

    def set_labels(self, subset):
        return tuple(sorted(self.labels[i] for i in subset))

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.rank == other.rank
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n, self.rank, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, {len(self.bases)} bases)"

    # -- JSON -----------------------------------------------------------------------

    def to_json(self):
        return {
            "n": self.n,
            "rank": self.rank,
            "labels": list(self.labels),
            "nonbases": [list(self.set_labels(b)) for b in self.nonbases],
        }

    @staticmethod
    def from_json(data):
        if "matrix" in data:
            config = PointConfiguration.from_json(data["matrix"])
            return Matroid.from_matrix(config, labels=data.get("labels"))
        n, rank = data["n"], data["rank"]
        labels = data.get("labels")
        if "bases" in data:
            return Matroid.from_bases(n, rank, data["bases"], labels)
        if "nonbases" in data:
            return Matroid.from_nonbases(n, rank, data["nonbases"], labels)
        raise MatroidError("matroid JSON needs bases, nonbases, or matrix")

    @staticmethod
    def loads(text: str):
        return Matroid.from_json(json.loads(text))
