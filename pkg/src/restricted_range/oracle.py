"""Brute-force ground truth computed from the multiplication table alone.

Nothing here looks at kernels, images or ranks of the maps; every relation is
read off products in S^1 (the table plus its virtual identity).
"""

from __future__ import annotations

from itertools import product as cartesian

import numpy as np

from .errors import SizeLimitError, VerificationError
from .partition import RelationPartition, from_labels, from_predicate, join, meet
from .semigroup import SemigroupTable

# -- Green's relations via principal ideals --------------------------------------


def _keyed(vectors, name) -> RelationPartition:
    return from_labels([v.tobytes() for v in vectors], name)


def principal_right(t: SemigroupTable, a: int) -> np.ndarray:
    return np.unique(t.product1[a])


def principal_left(t: SemigroupTable, a: int) -> np.ndarray:
    return np.unique(t.product1[:, a])


def principal_ideal(t: SemigroupTable, a: int) -> np.ndarray:
    left = principal_left(t, a)
    return np.unique(t.product1[left])


def oracle_R(t: SemigroupTable) -> RelationPartition:
    return _keyed([principal_right(t, a) for a in range(len(t))], "R")


def oracle_L(t: SemigroupTable) -> RelationPartition:
    return _keyed([principal_left(t, a) for a in range(len(t))], "L")


def oracle_H(t: SemigroupTable) -> RelationPartition:
    return meet(oracle_R(t), oracle_L(t), "H")


def oracle_D(t: SemigroupTable) -> RelationPartition:
    return join(oracle_R(t), oracle_L(t), "D")


def oracle_J(t: SemigroupTable) -> RelationPartition:
    return _keyed([principal_ideal(t, a) for a in range(len(t))], "J")


# -- starred and tilde relations -------------------------------------------------------


def _fiber_fingerprint(values: np.ndarray) -> np.ndarray:
    """Labels of the fibers of ``values``, numbered by first occurrence."""
    _, first, inv = np.unique(values, return_index=True, return_inverse=True)
    relabel = np.empty(len(first), dtype=np.int64)
    relabel[np.argsort(first)] = np.arange(len(first))
    return relabel[inv.reshape(-1)]


def oracle_Lstar(t: SemigroupTable) -> RelationPartition:
    """a L* b iff ax = ay <=> bx = by over S^1: equal fibers of x -> ax."""
    return _keyed([_fiber_fingerprint(t.product1[a]) for a in range(len(t))], "L*")


def oracle_Rstar(t: SemigroupTable) -> RelationPartition:
    """a R* b iff xa = ya <=> xb = yb over S^1: equal fibers of x -> xa."""
    return _keyed([_fiber_fingerprint(t.product1[:, a]) for a in range(len(t))], "R*")


def raw_Lstar(t: SemigroupTable) -> RelationPartition:
    """Definitional quantifier scan; only for tiny tables."""
    P = t.product1
    rng = range(len(t) + 1)

    def rel(a, b):
        return all((P[a, x] == P[a, y]) == (P[b, x] == P[b, y]) for x, y in cartesian(rng, rng))

    return from_predicate(len(t), rel, "L*")


def raw_Rstar(t: SemigroupTable) -> RelationPartition:
    P = t.product1
    rng = range(len(t) + 1)

    def rel(a, b):
        return all((P[x, a] == P[y, a]) == (P[x, b] == P[y, b]) for x, y in cartesian(rng, rng))

    return from_predicate(len(t), rel, "R*")


def oracle_Ltilde(t: SemigroupTable) -> RelationPartition:
    """a L~ b iff {f idempotent : af = a} = {f : bf = b}."""
    E = np.flatnonzero(t.idem_mask)
    P = t.product
    return _keyed([P[a, E] == a for a in range(len(t))], "L~")


def oracle_Rtilde(t: SemigroupTable) -> RelationPartition:
    """a R~ b iff {f idempotent : fa = a} = {f : fb = b}."""
    E = np.flatnonzero(t.idem_mask)
    P = t.product
    return _keyed([P[E, a] == a for a in range(len(t))], "R~")


def oracle_join(p: RelationPartition, q: RelationPartition, name="") -> RelationPartition:
    return join(p, q, name)


def oracle_Dstar(t: SemigroupTable) -> RelationPartition:
    return join(oracle_Lstar(t), oracle_Rstar(t), "D*")


def oracle_Dtilde(t: SemigroupTable) -> RelationPartition:
    return join(oracle_Ltilde(t), oracle_Rtilde(t), "D~")


# -- saturated principal ideals -------------------------------------------------------


def ideal_closure(t: SemigroupTable, mask: np.ndarray) -> np.ndarray:
    """S^1 X S^1 for the set X given as a boolean mask."""
    idx = np.flatnonzero(mask)
    left = np.unique(t.product1[:, idx])
    out = np.zeros(len(t), dtype=bool)
    out[np.unique(t.product1[left])] = True
    return out


def _saturate(mask, labelings):
    out = mask.copy()
    for lab in labelings:
        out |= np.isin(lab, np.unique(lab[mask]))
    return out


def saturated_ideal(t: SemigroupTable, a: int, labelings) -> np.ndarray:
    """Least ideal containing ``a`` that is a union of classes of every labeling."""
    mask = np.zeros(len(t), dtype=bool)
    mask[a] = True
    for _ in range(len(t) + 1):
        nxt = _saturate(ideal_closure(t, mask), labelings)
        if np.array_equal(nxt, mask):
            return mask
        mask = nxt
    raise VerificationError("saturated ideal did not stabilise", a)  # pragma: no cover


def _fixpoint_relation(t, side_parts, joined, name) -> RelationPartition:
    sides = [np.array(p.labels()) for p in side_parts]
    whole = [np.array(joined.labels())]
    keys = []
    for a in range(len(t)):
        m1 = saturated_ideal(t, a, sides)
        m2 = saturated_ideal(t, a, whole)
        if not np.array_equal(m1, m2):
            raise VerificationError(f"{name}: one-sided and joined saturation disagree", a)
        keys.append(m1)
    return _keyed(keys, name)


def oracle_Jstar(t: SemigroupTable, Lstar=None, Rstar=None) -> RelationPartition:
    Lstar = Lstar or oracle_Lstar(t)
    Rstar = Rstar or oracle_Rstar(t)
    return _fixpoint_relation(t, (Lstar, Rstar), join(Lstar, Rstar), "J*")


def oracle_Jtilde(t: SemigroupTable, Ltilde=None, Rtilde=None) -> RelationPartition:
    Ltilde = Ltilde or oracle_Ltilde(t)
    Rtilde = Rtilde or oracle_Rtilde(t)
    return _fixpoint_relation(t, (Ltilde, Rtilde), join(Ltilde, Rtilde), "J~")


def jstar_ideal(t: SemigroupTable, a: int) -> list:
    """Members of J*(a) as a sorted index list."""
    sides = [np.array(oracle_Lstar(t).labels()), np.array(oracle_Rstar(t).labels())]
    return [int(x) for x in np.flatnonzero(saturated_ideal(t, a, sides))]


ORACLES = {
    "R": oracle_R,
    "L": oracle_L,
    "H": oracle_H,
    "D": oracle_D,
    "J": oracle_J,
    "Lstar": oracle_Lstar,
    "Rstar": oracle_Rstar,
    "Ltilde": oracle_Ltilde,
    "Rtilde": oracle_Rtilde,
    "Dstar": oracle_Dstar,
    "Jstar": oracle_Jstar,
    "Dtilde": oracle_Dtilde,
    "Jtilde": oracle_Jtilde,
}


# -- ideals -----------------------------------------------------------------------------


def _mask_to_bits(mask) -> int:
    return sum(1 << int(i) for i in np.flatnonzero(mask))


def _bits_to_tuple(bits: int) -> tuple:
    out, i = [], 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def principal_ideals(t: SemigroupTable, within: np.ndarray | None = None) -> list:
    """Distinct principal two-sided ideals, as bitmasks.

    With ``within`` (a boolean mask of a subsemigroup U) the ideals are those of
    U: U^1 a U^1.
    """
    if within is None:
        return sorted({_mask_to_bits(np.isin(np.arange(len(t)), principal_ideal(t, a))) for a in range(len(t))})
    U = np.flatnonzero(within)
    U1 = np.append(U, t.one)
    P = t.product1
    out = set()
    for a in U:
        left = np.unique(P[U1, a])
        full = np.unique(P[np.ix_(left, U1)])
        out.add(_mask_to_bits(np.isin(np.arange(len(t)), full)))
    return sorted(out)


def oracle_ideals(t: SemigroupTable, max_principal: int = 16, within=None) -> list:
    """Every ideal, as a sorted index tuple: all unions of principal ideals."""
    prin = principal_ideals(t, within)
    if len(prin) > max_principal:
        raise SizeLimitError("distinct principal ideals", len(prin), max_principal)
    seen = set(prin)
    frontier = list(prin)
    while frontier:
        nxt = []
        for ideal in frontier:
            for p in prin:
                u = ideal | p
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted((_bits_to_tuple(b) for b in seen), key=lambda s: (len(s), s))


def is_ideal(t: SemigroupTable, members) -> bool:
    mask = np.zeros(len(t), dtype=bool)
    mask[list(members)] = True
    return bool(mask.any()) and np.array_equal(ideal_closure(t, mask), mask)


# -- congruence scans ------------------------------------------------------------------------


def oracle_left_congruence(t: SemigroupTable, part: RelationPartition) -> bool:
    """For all a ~ b and all c: ca ~ cb."""
    lab = np.array(part.labels())
    P = t.product
    for b in part.blocks:
        ref = lab[P[:, b[0]]]
        for x in b[1:]:
            if not np.array_equal(lab[P[:, x]], ref):
                return False
    return True


def oracle_right_congruence(t: SemigroupTable, part: RelationPartition) -> bool:
    """For all a ~ b and all c: ac ~ bc."""
    lab = np.array(part.labels())
    P = t.product
    for b in part.blocks:
        ref = lab[P[b[0]]]
        for x in b[1:]:
            if not np.array_equal(lab[P[x]], ref):
                return False
    return True


def left_congruence_counterexample(t: SemigroupTable, part: RelationPartition):
    """(a, b, c) with a ~ b but ca !~ cb, or None."""
    lab = np.array(part.labels())
    P = t.product
    for b in part.blocks:
        for x in b[1:]:
            bad = np.flatnonzero(lab[P[:, x]] != lab[P[:, b[0]]])
            if bad.size:
                return b[0], x, int(bad[0])
    return None


# -- L* o R* composites and chains ---------------------------------------------------------


def _indicator(part: RelationPartition) -> np.ndarray:
    lab = np.array(part.labels())
    return lab[:, None] == lab[None, :]


def composite_matrix(first: RelationPartition, second: RelationPartition) -> np.ndarray:
    """M[a, b] iff a first c second b for some c."""
    A = _indicator(first).astype(np.int64)
    B = _indicator(second).astype(np.int64)
    return (A @ B) > 0


def composite_witnesses(t: SemigroupTable, first, second, a: int, b: int) -> list:
    """All c with a first c and c second b, in index order."""
    la, lb = np.array(first.labels()), np.array(second.labels())
    return [int(c) for c in np.flatnonzero((la == la[a]) & (lb == lb[b]))]


def chain_distances(step: np.ndarray) -> np.ndarray:
    """Least n with a step^n b (-1 if unreachable); step^0 is the identity."""
    m = step.shape[0]
    dist = np.full((m, m), -1, dtype=np.int64)
    reach = np.eye(m, dtype=bool)
    dist[reach] = 0
    S = step.astype(np.int64)
    n = 0
    while True:
        n += 1
        nxt = (reach.astype(np.int64) @ S) > 0
        new = nxt & (dist < 0)
        if not new.any():
            return dist
        dist[new] = n
        reach = nxt | reach


def chain_bound_violations(t: SemigroupTable, Lstar=None, Rstar=None) -> list:
    """Pairs of rank > e whose L*oR* chain distance exceeds 2 |rank difference| + 3."""
    Lstar = Lstar or oracle_Lstar(t)
    Rstar = Rstar or oracle_Rstar(t)
    dist = chain_distances(composite_matrix(Lstar, Rstar))
    e = t.instance.e
    big = np.flatnonzero(t.rank > e)
    bad = []
    for a in big:
        for b in big:
            bound = 2 * abs(int(t.rank[a]) - int(t.rank[b])) + 3
            if dist[a, b] < 0 or dist[a, b] > bound:
                bad.append((int(a), int(b), int(dist[a, b])))
    return bad
