"""Conformance runner: closed forms against oracles, plus the structural checks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import endo as E
from . import exgreens as X
from . import greens as G
from . import ideals as I
from . import oracle as O
from . import semigroup as SG
from . import witness as W
from .errors import PreconditionError, SizeLimitError
from .partition import RelationPartition

SCHEMA = "restricted-range/1"
CLOSED = {**G.GREEN, **X.EXTENDED}
RELATIONS = list(CLOSED)


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    counterexample: object = None

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class Report:
    table: SG.SemigroupTable
    checks: list = field(default_factory=list)
    notices: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, counterexample=None, **detail):
        self.checks.append(Check(name, bool(passed), detail, counterexample))

    def to_json(self):
        return {
            "schema": SCHEMA,
            "instance": self.table.instance.to_json(),
            "classification": self.table.classification.to_json(),
            "passed": self.passed,
            "summary": self.summary,
            "notices": self.notices,
            "checks": [c.to_json() for c in self.checks],
        }


def show(t: SG.SemigroupTable, i) -> dict:
    return {"index": int(i), "map": E.label(t.elements[int(i)])}


def partition_difference(t, got: RelationPartition, want: RelationPartition):
    """A pair related in exactly one of the partitions, with representations."""
    lg, lw = got.labels(), want.labels()
    for i in range(len(lg)):
        for j in range(i + 1, len(lg)):
            if (lg[i] == lg[j]) != (lw[i] == lw[j]):
                return {"a": show(t, i), "b": show(t, j), "closed_form": lg[i] == lg[j]}
    return None


# -- check groups ----------------------------------------------------------------------


def structural_checks(t: SG.SemigroupTable, rep: Report, seed: int = 0):
    m = len(t)
    cls = t.classification
    rep.add("associativity", SG.is_associative(t) if m <= 100 else SG.is_associative(t, 100_000, seed))
    has_one = SG.identity_element(t) is not None
    rep.add("monoid_criterion", has_one == cls.monoid, table_monoid=has_one, predicted=cls.monoid)
    regular = bool(SG.regular_mask(t).all())
    rep.add("regularity_criterion", regular == cls.regular, table_regular=regular, predicted=cls.regular)
    masks = {
        "regular": SG.regular_mask(t),
        "left_identity": SG.left_identity_mask(t),
        "idempotent_left_identity": SG.idempotent_left_identity_mask(t),
        "image_sets": SG.values_q_mask(t),
    }
    bad = [k for k, v in masks.items() if not np.array_equal(v, t.q_mask)]
    rep.add("Q_characterisations", not bad, mismatched=bad)
    P = t.product
    lhs = t.rank[P]
    rhs = np.minimum(t.rank[:, None], t.rank[None, :])
    viol = np.argwhere(lhs > rhs)
    rep.add(
        "rank_inequality",
        viol.size == 0,
        [show(t, viol[0][0]), show(t, viol[0][1])] if viol.size else None,
    )
    outside = np.flatnonzero(~t.q_mask)
    rep.add("non_Q_rank_drop", bool(np.all(t.rank_B[outside] < t.rank[outside])))
    rep.add("idempotents_in_Q", bool(np.all(t.q_mask[t.idem_mask])))


def relation_checks(t, rep: Report, relations=None, skip_oracle=False):
    relations = relations or RELATIONS
    closed = {k: CLOSED[k](t) for k in relations}
    if skip_oracle:
        rep.notices.append("oracle comparison skipped")
        return closed, {}
    oracles = {}
    for k in relations:
        if k == "Jstar" and "Lstar" in oracles and "Rstar" in oracles:
            o = O.oracle_Jstar(t, oracles["Lstar"], oracles["Rstar"])
        elif k == "Jtilde" and "Ltilde" in oracles and "Rtilde" in oracles:
            o = O.oracle_Jtilde(t, oracles["Ltilde"], oracles["Rtilde"])
        else:
            o = O.ORACLES[k](t)
        oracles[k] = o
        same = closed[k] == o
        rep.add(
            f"relation:{k}",
            same,
            None if same else partition_difference(t, closed[k], o),
            classes=len(o),
        )
    return closed, oracles


def extended_checks(t, rep: Report, closed, oracles):
    inst = t.instance
    Ls = oracles.get("Lstar") or O.oracle_Lstar(t)
    Rs = oracles.get("Rstar") or O.oracle_Rstar(t)
    if "Ltilde" in oracles:
        rep.add("Lstar_equals_Ltilde", oracles["Ltilde"] == Ls)
    ds = closed.get("Dstar") or X.rel_Dstar(t)
    e = inst.e
    if inst.codim >= 2:
        expected = 2 if (t.rank > e).any() else 1
    else:
        expected = int(t.rank.max()) - e + 1
    rep.add("Dstar_class_count", len(ds) == expected, classes=len(ds), expected=expected)
    dt = closed.get("Dtilde") or X.rel_Dtilde_Jtilde(t)
    blocks = [tuple(int(i) for i in np.flatnonzero(t.rank == e)), tuple(int(i) for i in np.flatnonzero(t.rank > e))]
    rep.add("Dtilde_blocks", dt == RelationPartition(tuple(b for b in blocks if b)))

    ab = X.abundance(t, Ls, Rs, oracles.get("Ltilde"), oracles.get("Rtilde"))
    ok = ab.right_abundant and ab.right_fountain and not ab.left_abundant and not ab.left_fountain
    wit = ab.witnesses.get("left_abundant")
    rep.add(
        "abundance",
        ok and wit is not None and not t.q_mask[wit],
        show(t, wit) if wit is not None else None,
        **{k: v for k, v in ab.to_json().items() if k != "witnesses"},
    )

    predicted = X.rtilde_left_congruence_predicted(inst)
    rt = oracles.get("Rtilde") or O.oracle_Rtilde(t)
    observed = O.oracle_left_congruence(t, rt)
    cex = O.left_congruence_counterexample(t, rt)
    rep.add(
        "Rtilde_left_congruence",
        predicted == observed,
        [show(t, x) for x in cex] if cex else None,
        predicted=predicted,
        observed=observed,
    )
    rep.add("Lstar_right_congruence", O.oracle_right_congruence(t, Ls))
    rep.add("Rstar_left_congruence", O.oracle_left_congruence(t, Rs))

    comp = O.composite_matrix(Ls, Rs)
    m = len(t)
    mismatch = None
    for a in range(m):
        for b in range(m):
            if bool(comp[a, b]) != X.composite_LstarRstar(t, a, b):
                mismatch = [show(t, a), show(t, b)]
                break
        if mismatch:
            break
    rep.add("LstarRstar_composite", mismatch is None, mismatch)
    if inst.codim >= 2:
        viol = O.chain_bound_violations(t, Ls, Rs)
        rep.add("chain_length_bound", not viol, [show(t, v[0]) for v in viol[:1]] or None)


def q_checks(t, rep: Report):
    qs = SG.check_Q_structure(t)
    rep.add("Q_structure", qs.passed, qs.counterexamples[:1] or None, left_ideal_failure=qs.left_ideal_failure)
    bad = SG.check_product_regularity(t)
    rep.add("product_regularity_criterion", not bad, [show(t, x) for x in bad[0]] if bad else None)


def ideal_checks(t, rep: Report, max_principal=16, seed=0, samples=100):
    try:
        ideals = O.oracle_ideals(t, max_principal)
    except SizeLimitError as exc:
        rep.notices.append(f"ideal enumeration skipped: {exc}")
        ideals = None
    if ideals is not None:
        rep.summary["ideals"] = len(ideals)
        failed = [i for i in ideals if not I.theorem_form_check(t, i).passed]
        rep.add("ideal_theorem_forms", not failed, list(failed[0]) if failed else None, ideals=len(ideals))
    rng = np.random.default_rng(seed)
    m = len(t)
    bad = None
    for _ in range(samples):
        S = sorted(set(rng.integers(0, m, size=int(rng.integers(1, 4))).tolist()))
        for succ in (False, True):
            r = I.r_of_S(t, S)
            ext = set(I.T_k(t, r.succ() if succ else r)) | set(I.K_of_S(t, S))
            if not O.is_ideal(t, ext) or I.K_of_S(t, S) != I.K_of_S_products(t, S):
                bad = S
    rep.add("sampled_forms_are_ideals", bad is None, bad)
    try:
        chain = I.Q_ideal_chain(t)
        rep.add("Q_ideal_chain", True, chain=[d.describe() for d in chain])
    except Exception as exc:  # VerificationError carries the offending ideal
        rep.add("Q_ideal_chain", False, getattr(exc, "counterexample", str(exc)))
    pair = I.incomparable_pair(t)
    if pair:
        rep.add(
            "incomparable_pair",
            True,
            alpha=E.label(pair.alpha),
            beta=E.label(pair.beta),
        )
    else:
        rep.notices.append(f"incomparable pair not applicable: {pair.reason}")


def _sweep_pairs(m, limit, rng):
    if m * m <= limit:
        return [(a, b) for a in range(m) for b in range(m)]
    return [tuple(x) for x in rng.integers(0, m, size=(limit, 2)).tolist()]


def witness_checks(t, rep: Report, seed=0, pair_limit=256**2, samples=1000):
    inst = t.instance
    els = t.elements
    failures = {}

    def fail(op, *idx):
        failures.setdefault(op, [show(t, i) for i in idx])

    for i, a in enumerate(els):
        if not t.q_mask[i]:
            r = W.regularize(t, i)
            if not (E.is_regular_Q(r) and E.image(r) == E.image(a)):
                fail("regularize", i)
        else:
            if t.rank[i] > inst.e:
                r = W.deregularize(t, i)
                if E.is_regular_Q(r) or E.image(r) != E.image(a):
                    fail("deregularize", i)
            for s in range(inst.e, int(t.rank[i])):
                la = E.compose(W.rank_drop_multiplier(t, i, s), a)
                if E.is_regular_Q(la) or E.rank_on_B(la).value != s:
                    fail("rank_drop_multiplier", i)
    rng = np.random.default_rng(seed)
    pairs = _sweep_pairs(len(t), pair_limit if len(t) ** 2 <= pair_limit else samples, rng)
    for i, j in pairs:
        a, b = els[i], els[j]
        if E.kernel_contained(b, a) and E.compose(b, W.divide_right(t, i, j)) != a:
            fail("divide_right", i, j)
        if t.q_mask[j] and all(inst.contains(E.image(b), y) for y in E.image(a).canon):
            if E.compose(W.divide_left(t, i, j), b) != a:
                fail("divide_left", i, j)
        if t.rank[i] <= t.rank_B[j]:
            lam, mu = W.factorize_through(t, i, j)
            x = E.compose(lam, b)
            x = x if mu is None else E.compose(x, mu)
            if x != a or (mu is not None and not E.is_regular_Q(mu)):
                fail("factorize_through", i, j)
        if t.rank[i] == t.rank[j]:
            g, mu = W.iso_transfer(t, i, j)
            if not (
                E.kernel(g) == E.kernel(a)
                and E.image(g) == E.image(b)
                and E.kernel(mu) == E.kernel(b)
                and E.image(mu) == E.image(a)
            ):
                fail("iso_transfer", i, j)
    rep.add("witness_postconditions", not failures, failures or None, pairs=len(pairs))


def worked_example_checks(t, rep: Report):
    inst = t.instance
    if inst.kind == "set" and inst.n == 5 and inst.B == (2, 3, 4):
        a = t.index_of(E.Endo(inst, (2, 2, 2, 3, 4)))
        b = t.index_of(E.Endo(inst, (2, 2, 4, 4, 4)))
        g = t.index_of(E.Endo(inst, (2, 3, 4, 4, 4)))
        found = W.composite_witness_search(t, a, b, all_witnesses=True)
        back = W.composite_witness_search(t, a, b, "RL")
        rep.add(
            "noncommuting_example",
            g in found and back is None and X.composite_LstarRstar(t, a, b) and not X.composite_RstarLstar(t, a, b),
            witnesses=[E.label(t.elements[x]) for x in found],
        )
    if inst.kind == "set" and inst.n == 3 and len(inst.B) == 2:
        ideals = O.oracle_ideals(t)
        sizes = [len(i) for i in ideals]
        rep.add("eight_element_chain", len(t) == 8 and sizes == [2, 4, 8] and I.is_chain(ideals), sizes=sizes)


def run_conformance(
    t: SG.SemigroupTable,
    relations=None,
    ideals=True,
    witnesses=True,
    skip_oracle=False,
    max_principal=16,
    seed=0,
) -> Report:
    rep = Report(t)
    rep.summary["elements"] = len(t)
    rep.summary["Q"] = int(t.q_mask.sum())
    structural_checks(t, rep, seed)
    if not t.classification.standing_assumptions:
        rep.notices.append(
            f"regular instance ({t.classification.instance_class}): relation, ideal and witness suites skipped"
        )
        return rep
    q_checks(t, rep)
    closed, oracles = relation_checks(t, rep, relations, skip_oracle)
    rep.summary["Dstar_classes"] = len(closed.get("Dstar") or X.rel_Dstar(t))
    if not skip_oracle:
        extended_checks(t, rep, closed, oracles)
    if ideals:
        ideal_checks(t, rep, max_principal, seed)
    if witnesses:
        try:
            witness_checks(t, rep, seed)
        except PreconditionError as exc:
            rep.add("witness_postconditions", False, str(exc))
    worked_example_checks(t, rep)
    return rep
