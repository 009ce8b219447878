"""Exact rank oracles for finite matroids.

Four concrete families (uniform, graphic, linear over a prime field,
partition) plus minors obtained by restriction and contraction.  Elements
are dense 0-based integer ids; minors keep the original ids so that game
bookkeeping maps across them.  All rank arithmetic is exact integer
arithmetic; matroids are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections.abc import Iterable

# Rank queries on ground sets up to this size are memoized per matroid;
# larger ground sets are recomputed on every query.
_MEMO_LIMIT = 16

_PRIME_LIMIT = 2**31


class MatroidError(ValueError):
    """Malformed matroid description or invalid operation argument."""


def _as_subset(elements: Iterable[int]) -> frozenset[int]:
    return elements if isinstance(elements, frozenset) else frozenset(elements)


class Matroid:
    """Base class: an immutable rank oracle over a finite ground set."""

    _ground: frozenset[int]
    _memo: dict[frozenset[int], int] | None

    def _init_ground(self, ground: frozenset[int]) -> None:
        self._ground = ground
        self._memo = {} if len(ground) <= _MEMO_LIMIT else None

    @property
    def ground_set(self) -> frozenset[int]:
        return self._ground

    @property
    def ground_size(self) -> int:
        return len(self._ground)

    def rank(self, subset: Iterable[int]) -> int:
        s = _as_subset(subset)
        memo = self._memo
        if memo is not None:
            cached = memo.get(s)
            if cached is not None:
                return cached
        if not s <= self._ground:
            bad = sorted(s - self._ground)
            raise MatroidError(f"elements {bad} not in the ground set")
        value = self._rank(s)
        if memo is not None:
            memo[s] = value
        return value

    def _rank(self, subset: frozenset[int]) -> int:
        raise NotImplementedError

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = _as_subset(subset)
        return self.rank(s) == len(s)

    def full_rank(self) -> int:
        return self.rank(self._ground)

    def loops(self) -> frozenset[int]:
        """Elements of rank zero; never colorable in a proper coloring."""
        return frozenset(x for x in self._ground if self.rank(frozenset((x,))) == 0)

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        """All elements whose addition does not raise the rank of `subset`."""
        s = _as_subset(subset)
        r = self.rank(s)
        return frozenset(x for x in self._ground if self.rank(s | {x}) == r)

    def fundamental_circuit(self, independent: Iterable[int], element: int) -> frozenset[int]:
        """The unique circuit inside `independent` + `element`.

        Requires `independent` to be independent, `element` outside it, and
        the union dependent.  The circuit is exactly the set of members whose
        removal does not lower the rank of the union.
        """
        base = _as_subset(independent)
        if element in base:
            raise MatroidError(f"element {element} already in the independent set")
        if not self.is_independent(base):
            raise MatroidError("fundamental_circuit requires an independent set")
        union = base | {element}
        r = self.rank(union)
        if r == len(union):
            raise MatroidError("no circuit: the extended set is independent")
        return frozenset(x for x in union if self.rank(union - {x}) == r)

    def restrict(self, keep: Iterable[int]) -> Matroid:
        """Minor on `keep`; ranks agree with this matroid on subsets of `keep`."""
        s = _as_subset(keep)
        if not s <= self._ground:
            raise MatroidError(f"restriction set {sorted(s - self._ground)} outside the ground set")
        return _make_minor(self, frozenset(), s)

    def contract(self, away: Iterable[int]) -> Matroid:
        """Minor on the complement of `away` with ranks r(A + away) - r(away)."""
        c = _as_subset(away)
        if not c <= self._ground:
            raise MatroidError(f"contraction set {sorted(c - self._ground)} outside the ground set")
        return _make_minor(self, c, self._ground - c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))

    def _key(self) -> tuple:
        raise NotImplementedError


class UniformMatroid(Matroid):
    """U_{r,n}: every subset of at most r elements is independent."""

    def __init__(self, size: int, rank: int):
        if size < 0:
            raise MatroidError(f"uniform size must be >= 0, got {size}")
        if not 0 <= rank <= size:
            raise MatroidError(f"uniform rank must lie in [0, {size}], got {rank}")
        self.size = size
        self.r = rank
        self._init_ground(frozenset(range(size)))

    def _rank(self, subset: frozenset[int]) -> int:
        return min(len(subset), self.r)

    def _key(self) -> tuple:
        return (self.size, self.r)

    def __repr__(self) -> str:
        return f"UniformMatroid({self.size}, {self.r})"


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element i is the i-th edge.

    Rank of an edge set is the size of a spanning forest, computed with a
    disjoint-set forest rebuilt per query.  Self-loop edges are matroid
    loops; parallel edges are allowed.
    """

    def __init__(self, num_vertices: int, edges: list[tuple[int, int]]):
        if num_vertices < 0:
            raise MatroidError(f"vertex count must be >= 0, got {num_vertices}")
        checked = []
        for idx, edge in enumerate(edges):
            u, v = edge
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise MatroidError(
                    f"edge {idx} endpoints {u},{v} out of range [0, {num_vertices})")
            checked.append((u, v))
        self.num_vertices = num_vertices
        self.edges = tuple(checked)
        self._init_ground(frozenset(range(len(checked))))

    def _rank(self, subset: frozenset[int]) -> int:
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        rank = 0
        for e in subset:
            u, v = self.edges[e]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
                rank += 1
        return rank

    def _key(self) -> tuple:
        return (self.num_vertices, self.edges)

    def __repr__(self) -> str:
        return f"GraphicMatroid({self.num_vertices}, {list(self.edges)})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(p); element j is column j.

    Rank is computed by Gaussian elimination with exact modular arithmetic.
    """

    def __init__(self, prime: int, rows: list[list[int]]):
        if prime > _PRIME_LIMIT:
            raise MatroidError(f"field order must be <= 2^31, got {prime}")
        if not _is_prime(prime):
            raise MatroidError(f"field order must be prime, got {prime}")
        width = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != width:
                raise MatroidError(f"matrix row {i} has {len(row)} entries, expected {width}")
            for j, entry in enumerate(row):
                if not 0 <= entry < prime:
                    raise MatroidError(
                        f"matrix entry at row {i}, column {j} is {entry}, outside [0, {prime})")
        self.prime = prime
        self.rows = tuple(tuple(row) for row in rows)
        self._init_ground(frozenset(range(width)))

    def _rank(self, subset: frozenset[int]) -> int:
        p = self.prime
        cols = sorted(subset)
        mat = [[row[c] for c in cols] for row in self.rows]
        m, n = len(mat), len(cols)
        rank = 0
        for col in range(n):
            pivot = next((i for i in range(rank, m) if mat[i][col]), None)
            if pivot is None:
                continue
            mat[rank], mat[pivot] = mat[pivot], mat[rank]
            inv = pow(mat[rank][col], -1, p)
            mat[rank] = [(x * inv) % p for x in mat[rank]]
            for i in range(m):
                if i != rank and mat[i][col]:
                    f = mat[i][col]
                    mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[rank])]
            rank += 1
            if rank == m:
                break
        return rank

    def _key(self) -> tuple:
        return (self.prime, self.rows)

    def __repr__(self) -> str:
        return f"LinearMatroid({self.prime}, {[list(r) for r in self.rows]})"


class PartitionMatroid(Matroid):
    """Blocks with capacities; a set is independent when no block is over capacity."""

    def __init__(self, blocks: list[tuple[int, Iterable[int]]]):
        seen: set[int] = set()
        normalized = []
        for idx, (capacity, members) in enumerate(blocks):
            if capacity < 0:
                raise MatroidError(f"block {idx} capacity must be >= 0, got {capacity}")
            mset = frozenset(members)
            overlap = mset & seen
            if overlap:
                raise MatroidError(f"block {idx} reuses elements {sorted(overlap)}")
            seen |= mset
            normalized.append((capacity, mset))
        n = len(seen)
        if seen != set(range(n)):
            raise MatroidError(f"blocks must partition 0..{n - 1}, got {sorted(seen)}")
        self.blocks = tuple(normalized)
        self._init_ground(frozenset(range(n)))

    def _rank(self, subset: frozenset[int]) -> int:
        return sum(min(len(subset & members), cap) for cap, members in self.blocks)

    def _key(self) -> tuple:
        return self.blocks

    def __repr__(self) -> str:
        parts = [f"({cap}, {sorted(members)})" for cap, members in self.blocks]
        return f"PartitionMatroid([{', '.join(parts)}])"


class MinorMatroid(Matroid):
    """Restriction and/or contraction of a base matroid.

    Stores a flat (base, contracted, ground) triple; composing minors never
    nests views.  Ranks come from the base oracle via
    r(A) = r_base(A + contracted) - r_base(contracted).
    """

    def __init__(self, base: Matroid, contracted: frozenset[int], ground: frozenset[int]):
        self.base = base
        self.contracted = contracted
        self._contracted_rank = base.rank(contracted)
        self._init_ground(ground)

    def _rank(self, subset: frozenset[int]) -> int:
        return self.base.rank(subset | self.contracted) - self._contracted_rank

    def _key(self) -> tuple:
        return (self.base, self.contracted, self._ground)

    def __repr__(self) -> str:
        return (f"MinorMatroid({self.base!r}, contracted={sorted(self.contracted)}, "
                f"ground={sorted(self._ground)})")


def _make_minor(m: Matroid, contracted: frozenset[int], ground: frozenset[int]) -> Matroid:
    if isinstance(m, MinorMatroid):
        return MinorMatroid(m.base, m.contracted | contracted, ground)
    if not contracted and ground == m.ground_set:
        return m
    return MinorMatroid(m, contracted, ground)


def shared_ground_set(matroids) -> frozenset[int]:
    """The common ground set of a nonempty collection of matroids."""
    ms = list(matroids)
    if not ms:
        raise MatroidError("need at least one matroid")
    ground = ms[0].ground_set
    for m in ms[1:]:
        if m.ground_set != ground:
            raise MatroidError("matroids do not share a ground set")
    return ground
