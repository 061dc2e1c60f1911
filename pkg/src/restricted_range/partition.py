"""Equivalence relations on element indices, in canonical form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import VerificationError


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            if y < x:
                x, y = y, x
            self.parent[y] = x

    def blocks(self):
        groups: dict = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return groups.values()


@dataclass(frozen=True)
class RelationPartition:
    """Blocks are sorted tuples, listed in order of their least element.

    Equality ignores ``name``: two relations are equal when their blocks are.
    """

    blocks: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks if b))
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def labels(self) -> list:
        """Block number of every element."""
        lab = [0] * self.size
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x] = k
        return lab

    def block_of(self, x) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def related(self, x, y) -> bool:
        lab = self.labels()
        return lab[x] == lab[y]

    def refines(self, other: RelationPartition) -> bool:
        """Every block of self lies inside a block of other."""
        lab = other.labels()
        return all(len({lab[x] for x in b}) == 1 for b in self.blocks)

    def renamed(self, name) -> RelationPartition:
        return RelationPartition(self.blocks, name)

    def to_json(self):
        return {"relation": self.name, "classes": [list(b) for b in self.blocks]}


def from_labels(labels, name="") -> RelationPartition:
    groups: dict = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return RelationPartition(tuple(groups.values()), name)


def from_predicate(n, related, name="") -> RelationPartition:
    """Partition generated by a pairwise predicate, checked to be an equivalence.

    Raises VerificationError if the predicate is not transitive on the blocks
    it generates.
    """
    uf = UnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if uf.find(i) != uf.find(j) and related(i, j):
                uf.union(i, j)
    part = RelationPartition(tuple(uf.blocks()), name)
    for b in part.blocks:
        for x in range(len(b)):
            for y in range(x + 1, len(b)):
                if not related(b[x], b[y]):
                    raise VerificationError(
                        f"{name or 'relation'} is not transitive", (b[x], b[y])
                    )
    return part


def join(p: RelationPartition, q: RelationPartition, name="") -> RelationPartition:
    """Smallest equivalence containing both."""
    if p.size != q.size:
        raise ValueError("partitions over different index sets")
    uf = UnionFind(p.size)
    for part in (p, q):
        for b in part.blocks:
            for x in b[1:]:
                uf.union(b[0], x)
    return RelationPartition(tuple(uf.blocks()), name)


def meet(p: RelationPartition, q: RelationPartition, name="") -> RelationPartition:
    if p.size != q.size:
        raise ValueError("partitions over different index sets")
    lp, lq = p.labels(), q.labels()
    return from_labels(list(zip(lp, lq)), name)


def identity(n, name="") -> RelationPartition:
    return RelationPartition(tuple((i,) for i in range(n)), name)
