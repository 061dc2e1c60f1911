"""Full enumeration of T(A, B) and the structural checks on it.

Elements are indexed ``0..m-1``. Index ``m`` is a virtual identity used
wherever a quantifier ranges over S^1; ``product1`` is the table extended by it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian

import numpy as np

from . import endo as E
from .algebra import AlgebraInstance, SetModel
from .errors import SizeLimitError

DEFAULT_CAP = 4096


@dataclass(frozen=True)
class Classification:
    monoid: bool
    regular: bool
    standing_assumptions: bool
    instance_class: str  # "Monoid" | "Regular" | "NonRegular"

    def to_json(self):
        return {
            "monoid": self.monoid,
            "regular": self.regular,
            "standing_assumptions": self.standing_assumptions,
            "instance_class": self.instance_class,
        }


def classify_instance(instance: AlgebraInstance) -> Classification:
    """Closed-form classification of T(A, B) as monoid / regular / non-regular."""
    full = instance.dim_B == instance.dim
    singleton = len(instance.B_elements) == 1
    monoid = full or singleton
    if full:
        regular = True
    else:
        has_constants = bool(instance.constants())
        regular = not (instance.dim_B >= 2 or (has_constants and instance.dim_B == 1))
    if monoid:
        cls = "Monoid"
    elif regular:
        cls = "Regular"
    else:
        cls = "NonRegular"
    return Classification(monoid, regular, not regular, cls)


@dataclass
class SemigroupTable:
    instance: AlgebraInstance
    elements: list
    product: np.ndarray
    values: np.ndarray  # values[i, x] = A-index of (x-th element of A) under element i
    q_mask: np.ndarray
    idem_mask: np.ndarray
    rank: np.ndarray
    rank_B: np.ndarray
    kernel: list
    kernel_B: list
    image: list
    classification: Classification
    index: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.elements)

    @property
    def one(self) -> int:
        return len(self.elements)

    @cached_property
    def product1(self) -> np.ndarray:
        m = len(self.elements)
        out = np.empty((m + 1, m + 1), dtype=self.product.dtype)
        out[:m, :m] = self.product
        out[m, :] = np.arange(m + 1)
        out[:, m] = np.arange(m + 1)
        return out

    def mul(self, i, j) -> int:
        return int(self.product1[i, j])

    def index_of(self, a: E.Endo) -> int:
        return self.index[a.data]

    @cached_property
    def B_positions(self) -> np.ndarray:
        inst = self.instance
        return np.array([inst.element_index(b) for b in inst.B_elements], dtype=np.int64)

    @property
    def idempotents(self) -> list:
        return [int(i) for i in np.flatnonzero(self.idem_mask)]

    def to_json(self) -> dict:
        return {
            "schema": "restricted-range/1",
            "instance": self.instance.to_json(),
            "size": len(self),
            "elements": [a.to_json() for a in self.elements],
            "q_mask": [bool(x) for x in self.q_mask],
            "idem_mask": [bool(x) for x in self.idem_mask],
            "classification": self.classification.to_json(),
        }


def count_elements(instance: AlgebraInstance) -> int:
    return len(instance.B_elements) ** instance.n


def enumerate_semigroup(instance: AlgebraInstance, cap: int = DEFAULT_CAP) -> SemigroupTable:
    """All of T(A, B), lexicographic in the sequence of B-element indices, with products."""
    k = len(instance.B_elements)
    n = instance.n
    m = k**n
    if m > cap:
        raise SizeLimitError("|T(A,B)|", m, cap)
    codes = np.array(list(cartesian(range(k), repeat=n)), dtype=np.int64).reshape(m, n)
    weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    belems = instance.B_elements

    if isinstance(instance, SetModel):
        B_as_int = np.array(belems, dtype=np.int64)
        values = B_as_int[codes]  # A-index of x is x itself
        bimg = codes[:, B_as_int]
        elements = [E.Endo(instance, tuple(int(v) for v in row)) for row in values]
    else:
        p = instance.p
        bvec = np.array(belems, dtype=np.int64).reshape(k, n)
        rows = bvec[codes]  # (m, n, n)
        powers = p ** np.arange(n, dtype=np.int64)
        lookup = np.full(p**n, -1, dtype=np.int64)
        lookup[bvec @ powers] = np.arange(k)
        bimg = lookup[(np.einsum("kn,mnl->mkl", bvec, rows) % p) @ powers]
        avec = np.array(instance.A_elements, dtype=np.int64).reshape(-1, n)
        # A_elements are sorted by little-endian code, so a vector's code is its index
        values = (np.einsum("an,mnl->mal", avec, rows) % p) @ powers
        elements = [
            E.Endo(instance, tuple(tuple(int(v) for v in r) for r in mat)) for mat in rows
        ]

    prod = np.empty((m, m), dtype=np.int32 if m < 2**31 else np.int64)
    for i in range(m):
        prod[i] = bimg[:, codes[i]] @ weights

    idem = prod[np.arange(m), np.arange(m)] == np.arange(m)
    q = np.array([E.is_regular_Q(a) for a in elements], dtype=bool)
    rank = np.array([E.rank(a).value for a in elements], dtype=np.int64)
    rank_B = np.array([E.rank_on_B(a).value for a in elements], dtype=np.int64)
    return SemigroupTable(
        instance=instance,
        elements=elements,
        product=prod,
        values=values,
        q_mask=q,
        idem_mask=idem,
        rank=rank,
        rank_B=rank_B,
        kernel=[E.kernel(a).canon for a in elements],
        kernel_B=[E.kernel_on_B(a).canon for a in elements],
        image=[E.image(a).canon for a in elements],
        classification=classify_instance(instance),
        index={a.data: i for i, a in enumerate(elements)},
    )


# -- table-level facts, computed from the multiplication alone -----------------


def is_associative(table: SemigroupTable, samples: int | None = None, seed: int = 0) -> bool:
    P = table.product
    m = len(table)
    if samples is None:
        # (ab)c == a(bc) for all triples, one 'a' at a time
        for a in range(m):
            if not np.array_equal(P[P[a]], P[a][P]):
                return False
        return True
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, m, size=(3, samples))
    return bool(np.all(P[P[a, b], c] == P[a, P[b, c]]))


def identity_element(table: SemigroupTable) -> int | None:
    P = table.product
    ar = np.arange(len(table))
    for e in range(len(table)):
        if np.array_equal(P[e], ar) and np.array_equal(P[:, e], ar):
            return e
    return None


def regular_mask(table: SemigroupTable) -> np.ndarray:
    """a is regular iff a = a g a for some g."""
    P = table.product
    return np.array([bool(np.any(P[P[a], a] == a)) for a in range(len(table))], dtype=bool)


def left_identity_mask(table: SemigroupTable) -> np.ndarray:
    """a = g a for some g in S."""
    P = table.product
    return np.array([bool(np.any(P[:, a] == a)) for a in range(len(table))], dtype=bool)


def idempotent_left_identity_mask(table: SemigroupTable) -> np.ndarray:
    """a = h a for some idempotent h of the same rank as a."""
    P = table.product
    out = np.zeros(len(table), dtype=bool)
    for a in range(len(table)):
        fix = (P[:, a] == a) & table.idem_mask & (table.rank == table.rank[a])
        out[a] = bool(np.any(fix))
    return out


def values_q_mask(table: SemigroupTable) -> np.ndarray:
    """Aa == Ba compared as element sets of the evaluation graph."""
    bpos = table.B_positions
    return np.array(
        [set(row.tolist()) == set(row[bpos].tolist()) for row in table.values], dtype=bool
    )


@dataclass
class QStructureReport:
    right_ideal: bool
    inner_inverses_in_Q: dict  # a -> g in Q with a = a g a
    q_regular: bool
    qc_nonregular: bool
    left_ideal_failure: tuple | None  # (lam, beta) with beta in Q, lam beta not in Q
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.right_ideal and self.q_regular and self.qc_nonregular

    def to_json(self):
        return {
            "right_ideal": self.right_ideal,
            "q_regular": self.q_regular,
            "qc_nonregular": self.qc_nonregular,
            "left_ideal_failure": list(self.left_ideal_failure) if self.left_ideal_failure else None,
            "counterexamples": self.counterexamples,
        }


def check_Q_structure(table: SemigroupTable) -> QStructureReport:
    """Q is a right ideal, its members have inverses in Q, Q^c has none, Q is no left ideal."""
    P = table.product
    q = table.q_mask
    qi = np.flatnonzero(q)
    bad = []
    right_ideal = True
    for a in qi:
        out = np.flatnonzero(~q[P[a]])
        if out.size:
            right_ideal = False
            bad.append({"check": "right_ideal", "a": int(a), "b": int(out[0])})
    inverses = {}
    q_regular = True
    for a in qi:
        cand = qi[P[P[a, qi], a] == a]
        if cand.size == 0:
            q_regular = False
            bad.append({"check": "q_regular", "a": int(a)})
        else:
            inverses[int(a)] = int(cand[0])
    qc_nonregular = True
    for b in np.flatnonzero(~q):
        if np.any(P[P[b], b] == b):
            qc_nonregular = False
            bad.append({"check": "qc_nonregular", "b": int(b)})
    failure = None
    for beta in qi:
        lam = np.flatnonzero(~q[P[:, beta]])
        if lam.size:
            failure = (int(lam[0]), int(beta))
            break
    return QStructureReport(right_ideal, inverses, q_regular, qc_nonregular, failure, bad)


def product_regularity_criterion(table: SemigroupTable, a: int, b: int) -> bool:
    """For every x in A some y in B has (x a, y a) in ker b."""
    va, vb = table.values[a], table.values[b]
    through_B = {int(vb[va[y]]) for y in table.B_positions}
    return all(int(vb[va[x]]) in through_B for x in range(va.shape[0]))


def check_product_regularity(table: SemigroupTable) -> list:
    """Pairs where the criterion disagrees with Q-membership of the product."""
    bad = []
    m = len(table)
    for a in range(m):
        for b in range(m):
            if product_regularity_criterion(table, a, b) != bool(table.q_mask[table.product[a, b]]):
                bad.append((a, b))
    return bad
