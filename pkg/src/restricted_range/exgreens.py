"""Starred and tilde relations on T(A, B) from their closed forms.

Also the abundance report, the left-congruence dichotomy for R~, and
cardinal-level predicates for the branches that only occur in infinite
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import ALEPH_0, Cardinal, SetModel
from .partition import RelationPartition, from_predicate
from .semigroup import SemigroupTable

# -- cardinal-level predicates -------------------------------------------------------


def _card(x) -> Cardinal:
    return x if isinstance(x, Cardinal) else Cardinal.finite(x)


def dstar_related(rank_a, rank_b, codim, e) -> bool:
    """D* between maps of the given ranks, by the codimension of B."""
    ra, rb, c = _card(rank_a), _card(rank_b), _card(codim)
    if ra == rb:
        return True
    if c <= Cardinal.finite(1):
        return False
    e = _card(e)
    if c.is_finite:
        return e < ra < ALEPH_0 and e < rb < ALEPH_0
    return e < ra <= c and e < rb <= c


def lstar_rstar_composite(rank_a, beta_in_Q: bool, rank_b, rank_b_on_B, codim) -> bool:
    """Whether some gamma has alpha L* gamma R* beta, from ranks alone."""
    ra, rb, rbB, c = _card(rank_a), _card(rank_b), _card(rank_b_on_B), _card(codim)
    if beta_in_Q:
        return ra == rb
    if rbB >= ALEPH_0 and rbB == ra:
        return True
    return rbB < ra <= rbB + c


def same_rank_forced(rank_a, codim, dim_B) -> bool:
    """Hypothesis of the lemma where codim B < rank alpha = aleph_k <= dim B.

    Under it, alpha L*oR* beta holds only for beta of the same rank.
    """
    ra, c, d = _card(rank_a), _card(codim), _card(dim_B)
    return not ra.is_finite and c < ra <= d


def rank_jump_target(rank_a, nu, dim_B, codim) -> bool:
    """Whether a rank-``nu`` partner of a Q-map of rank ``rank_a`` is promised.

    Requires dim B infinite, codim B = aleph_k and aleph_0 <= rank_a < nu <= min(dim B, codim).
    """
    ra, v, d, c = _card(rank_a), _card(nu), _card(dim_B), _card(codim)
    if d.is_finite or c.is_finite:
        return False
    M = min(d, c)
    return ALEPH_0 <= ra < v <= M


# -- pair predicates on a table --------------------------------------------------------


def Lstar_related(t: SemigroupTable, i, j) -> bool:
    return t.image[i] == t.image[j]


Ltilde_related = Lstar_related


def Rstar_related(t: SemigroupTable, i, j) -> bool:
    qi, qj = bool(t.q_mask[i]), bool(t.q_mask[j])
    if qi and qj:
        return t.kernel[i] == t.kernel[j]
    if not qi and not qj:
        return t.kernel_B[i] == t.kernel_B[j]
    return False


def Rtilde_related(t: SemigroupTable, i, j) -> bool:
    qi, qj = bool(t.q_mask[i]), bool(t.q_mask[j])
    if qi and qj:
        return t.kernel[i] == t.kernel[j]
    return not qi and not qj


def Dstar_related(t: SemigroupTable, i, j) -> bool:
    inst = t.instance
    return dstar_related(int(t.rank[i]), int(t.rank[j]), inst.codim, inst.e)


Jstar_related = Dstar_related


def Dtilde_related(t: SemigroupTable, i, j) -> bool:
    if t.instance.codim == 0:
        # B = A is regular, so D~ = D: one class per rank
        return t.rank[i] == t.rank[j]
    e = t.instance.e
    return (t.rank[i] == e) == (t.rank[j] == e)


def composite_LstarRstar(t: SemigroupTable, i, j) -> bool:
    """alpha (L* o R*) beta: some gamma with alpha L* gamma and gamma R* beta."""
    return lstar_rstar_composite(
        int(t.rank[i]), bool(t.q_mask[j]), int(t.rank[j]), int(t.rank_B[j]), t.instance.codim
    )


def composite_RstarLstar(t: SemigroupTable, i, j) -> bool:
    """alpha (R* o L*) beta, the dual: it holds iff beta (L* o R*) alpha."""
    return composite_LstarRstar(t, j, i)


# -- partitions -----------------------------------------------------------------------------


def _partition(t, pred, name):
    return from_predicate(len(t), lambda i, j: pred(t, i, j), name)


def rel_Lstar(t: SemigroupTable, name="L*") -> RelationPartition:
    return _partition(t, Lstar_related, name)


def rel_Ltilde(t: SemigroupTable) -> RelationPartition:
    return rel_Lstar(t, "L~")


def rel_Rstar(t: SemigroupTable) -> RelationPartition:
    return _partition(t, Rstar_related, "R*")


def rel_Rtilde(t: SemigroupTable) -> RelationPartition:
    return _partition(t, Rtilde_related, "R~")


def rel_Dstar(t: SemigroupTable, name="D*") -> RelationPartition:
    return _partition(t, Dstar_related, name)


def rel_Jstar(t: SemigroupTable) -> RelationPartition:
    return rel_Dstar(t, "J*")


def rel_Dtilde_Jtilde(t: SemigroupTable, name="D~") -> RelationPartition:
    return _partition(t, Dtilde_related, name)


EXTENDED = {
    "Lstar": rel_Lstar,
    "Rstar": rel_Rstar,
    "Ltilde": rel_Ltilde,
    "Rtilde": rel_Rtilde,
    "Dstar": rel_Dstar,
    "Jstar": rel_Jstar,
    "Dtilde": rel_Dtilde_Jtilde,
    "Jtilde": lambda t: rel_Dtilde_Jtilde(t, "J~"),
}


# -- abundance and congruence -----------------------------------------------------------------


@dataclass
class AbundanceReport:
    right_abundant: bool
    left_abundant: bool
    right_fountain: bool
    left_fountain: bool
    witnesses: dict = field(default_factory=dict)  # property -> element with no idempotent in its class

    def to_json(self):
        return {
            "right_abundant": self.right_abundant,
            "left_abundant": self.left_abundant,
            "right_fountain": self.right_fountain,
            "left_fountain": self.left_fountain,
            "witnesses": dict(self.witnesses),
        }


def _idempotent_free_member(part: RelationPartition, idem_mask):
    for b in part.blocks:
        if not any(idem_mask[x] for x in b):
            return b[0]
    return None


def abundance(
    t: SemigroupTable,
    Lstar: RelationPartition | None = None,
    Rstar: RelationPartition | None = None,
    Ltilde: RelationPartition | None = None,
    Rtilde: RelationPartition | None = None,
) -> AbundanceReport:
    """Scan each class for an idempotent. Partitions default to the closed forms."""
    parts = {
        "right_abundant": Lstar or rel_Lstar(t),
        "left_abundant": Rstar or rel_Rstar(t),
        "right_fountain": Ltilde or rel_Ltilde(t),
        "left_fountain": Rtilde or rel_Rtilde(t),
    }
    flags, wit = {}, {}
    for key, part in parts.items():
        bad = _idempotent_free_member(part, t.idem_mask)
        flags[key] = bad is None
        if bad is not None:
            wit[key] = bad
    return AbundanceReport(witnesses=wit, **flags)


def one_dim_subalgebras_singletons(instance) -> bool:
    # a set has <x> = {x}; a vector line over GF(p) has p elements
    return isinstance(instance, SetModel)


def constant_subalgebra_size(instance) -> int:
    return len(instance.constants())


def rtilde_left_congruence_predicted(instance) -> bool:
    d = instance.dim_B
    return (d == 2 and one_dim_subalgebras_singletons(instance)) or (
        d == 1 and constant_subalgebra_size(instance) == 1
    )


def rtilde_left_congruence(t: SemigroupTable):
    """(predicted, observed) for "R~ is a left congruence"."""
    from .oracle import oracle_left_congruence

    return rtilde_left_congruence_predicted(t.instance), oracle_left_congruence(t, rel_Rtilde(t))
