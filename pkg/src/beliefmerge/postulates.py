"""Per-instance checkers for the merging postulates.

These are verdicts on one concrete instance, not universal provers: the
theorems are exercised empirically by running the checkers over seeded
suites. A failing verdict always carries a witness that can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .distance import DistanceKind, model_distance
from .errors import InconsistentConstraintsError, UnsatisfiableFormulaError
from .formulae import (
    DEFAULT_MAX_VARS,
    And,
    Formula,
    Model,
    TRUE,
    Universe,
    evaluate,
    models_of,
    truth_table,
)
from .merge import Instance, merge_scheme
from .weights import (
    AllPositiveWeights,
    ExpertWeights,
    ExplicitWeights,
    WeightScheme,
    default_expert_weight,
    expand_scheme,
)

@dataclass(frozen=True)
class OperatorConfig:
    kind: DistanceKind
    scheme: WeightScheme


@dataclass(frozen=True)
class Verdict:
    passed: bool
    vacuous: bool = False
    witness: object = None

    @property
    def status(self) -> str:
        if self.vacuous:
            return "vacuous-pass"
        return "pass" if self.passed else "fail"


def _merged(cfg: OperatorConfig, inst: Instance) -> frozenset[Model]:
    return merge_scheme(inst, cfg.scheme, cfg.kind).models


def _fail(**witness) -> Verdict:
    return Verdict(False, witness=witness)


def check_ic0(cfg: OperatorConfig, inst: Instance) -> Verdict:
    """Every merged model satisfies the integrity constraints."""
    bad = [m for m in _merged(cfg, inst) if not evaluate(inst.constraints, m)]
    return Verdict(True) if not bad else _fail(models=bad)


def check_ic1(cfg: OperatorConfig, inst: Instance) -> Verdict:
    """Consistent constraints yield a consistent merge."""
    return Verdict(bool(_merged(cfg, inst)))


def check_ic2(cfg: OperatorConfig, inst: Instance) -> Verdict:
    """When mu and the whole profile agree, merging is their conjunction."""
    table = truth_table(inst.constraints, inst.universe, inst.max_vars)
    for f in inst.profile:
        table = table & truth_table(f, inst.universe, inst.max_vars)
    if not table.any():
        return Verdict(True, vacuous=True)
    conj = frozenset(
        Model(inst.universe, int(b)) for b in table.nonzero()[0]
    )
    merged = _merged(cfg, inst)
    if merged == conj:
        return Verdict(True)
    return _fail(merged=sorted(merged, key=lambda m: m.bits),
                 conjunction=sorted(conj, key=lambda m: m.bits))


def _equivalent(f: Formula, g: Formula, universe: Universe, max_vars: int) -> bool:
    return bool(
        (truth_table(f, universe, max_vars) == truth_table(g, universe, max_vars)).all()
    )


def check_ic3(
    cfg: OperatorConfig,
    inst: Instance,
    other: Instance,
    permutation: Sequence[int] | None = None,
) -> Verdict:
    """Syntax independence: equivalent inputs merge to the same models.

    Profile equivalence is formula-wise at matching indices; an explicit
    permutation may be supplied, which is sound for permutation-closed
    schemes. Non-equivalent inputs are a usage error, not a failure.
    """
    if inst.universe != other.universe or inst.m != other.m:
        raise ValueError("instances are not comparable")
    perm = list(permutation) if permutation is not None else list(range(inst.m))
    if sorted(perm) != list(range(inst.m)):
        raise ValueError("permutation must be a bijection on profile indices")
    if not _equivalent(inst.constraints, other.constraints, inst.universe, inst.max_vars):
        raise ValueError("constraints are not equivalent")
    for i, j in enumerate(perm):
        if not _equivalent(inst.profile[i], other.profile[j], inst.universe, inst.max_vars):
            raise ValueError(f"profile entries {i} and {j} are not equivalent")
    a, b = _merged(cfg, inst), _merged(cfg, other)
    return Verdict(True) if a == b else _fail(left=sorted(a, key=lambda m: m.bits),
                                              right=sorted(b, key=lambda m: m.bits))


def check_ic4(cfg: OperatorConfig, inst: Instance) -> Verdict:
    """Fairness between two sources that both respect the constraints."""
    if inst.m != 2:
        raise ValueError("IC4 is stated for two-formula profiles")
    mu_table = truth_table(inst.constraints, inst.universe, inst.max_vars)
    for idx, f in enumerate(inst.profile):
        entails = not (truth_table(f, inst.universe, inst.max_vars) & ~mu_table).any()
        if not entails:
            raise ValueError(f"profile entry {idx + 1} does not entail the constraints")
    merged = _merged(cfg, inst)
    with_f1 = any(evaluate(inst.profile[0], m) for m in merged)
    with_f2 = any(evaluate(inst.profile[1], m) for m in merged)
    if with_f1 == with_f2:
        return Verdict(True)
    return _fail(merged=sorted(merged, key=lambda m: m.bits),
                 consistent_with=1 if with_f1 else 2)


def product_scheme(
    left: WeightScheme,
    right: WeightScheme,
    k_left: int,
    k_right: int,
    kind: DistanceKind,
    n: int,
) -> WeightScheme:
    """The scheme whose vectors concatenate one vector from each part.

    The product of two all-positive sets is the all-positive set of the
    joint dimension; any two finite parts multiply into an explicit list.
    """
    if isinstance(left, AllPositiveWeights) and isinstance(right, AllPositiveWeights):
        return AllPositiveWeights()
    if isinstance(left, ExpertWeights) and left.a is None:
        left = ExpertWeights(default_expert_weight(kind, n, k_left))
    if isinstance(right, ExpertWeights) and right.a is None:
        right = ExpertWeights(default_expert_weight(kind, n, k_right))
    lv = expand_scheme(left, k_left)
    rv = expand_scheme(right, k_right)
    if lv is None or rv is None:
        raise ValueError("cannot mix the all-positive scheme with a finite one in a product")
    return ExplicitWeights([a + b for a in lv for b in rv])


def _split_check(
    kind: DistanceKind,
    inst: Instance,
    split: int,
    scheme_left: WeightScheme,
    scheme_right: WeightScheme,
):
    if not 1 <= split < inst.m:
        raise ValueError(f"split must be in 1..{inst.m - 1}")
    left = Instance(inst.universe, inst.constraints, inst.profile[:split], inst.max_vars)
    right = Instance(inst.universe, inst.constraints, inst.profile[split:], inst.max_vars)
    combined_scheme = product_scheme(
        scheme_left, scheme_right, split, inst.m - split, kind, inst.universe.n
    )
    la = merge_scheme(left, scheme_left, kind).models
    rb = merge_scheme(right, scheme_right, kind).models
    both = la & rb
    combined = merge_scheme(inst, combined_scheme, kind).models
    return both, combined


def check_ic5(
    kind: DistanceKind,
    inst: Instance,
    split: int,
    scheme_left: WeightScheme,
    scheme_right: WeightScheme,
) -> Verdict:
    """Conjoined part merges entail the product-scheme merge."""
    both, combined = _split_check(kind, inst, split, scheme_left, scheme_right)
    if both <= combined:
        return Verdict(True)
    return _fail(extra=sorted(both - combined, key=lambda m: m.bits))


def check_ic6(
    kind: DistanceKind,
    inst: Instance,
    split: int,
    scheme_left: WeightScheme,
    scheme_right: WeightScheme,
) -> Verdict:
    """A consistent conjunction of part merges absorbs the product merge."""
    both, combined = _split_check(kind, inst, split, scheme_left, scheme_right)
    if not both:
        return Verdict(True, vacuous=True)
    if combined <= both:
        return Verdict(True)
    return _fail(extra=sorted(combined - both, key=lambda m: m.bits))


def check_ic7(cfg: OperatorConfig, inst: Instance, mu_prime: Formula) -> Verdict:
    """Restricting after merging never beats merging under the restriction."""
    merged = _merged(cfg, inst)
    lhs = frozenset(m for m in merged if evaluate(mu_prime, m))
    try:
        narrowed = Instance(
            inst.universe, And(inst.constraints, mu_prime), inst.profile, inst.max_vars
        )
    except InconsistentConstraintsError:
        return Verdict(not lhs, vacuous=not lhs)
    rhs = _merged(cfg, narrowed)
    if lhs <= rhs:
        return Verdict(True)
    return _fail(extra=sorted(lhs - rhs, key=lambda m: m.bits))


def check_ic8(cfg: OperatorConfig, inst: Instance, mu_prime: Formula) -> Verdict:
    """The converse inclusion; fails for all-positive Hamming merging."""
    merged = _merged(cfg, inst)
    lhs = frozenset(m for m in merged if evaluate(mu_prime, m))
    if not lhs:
        return Verdict(True, vacuous=True)
    narrowed = Instance(
        inst.universe, And(inst.constraints, mu_prime), inst.profile, inst.max_vars
    )
    rhs = _merged(cfg, narrowed)
    if rhs <= merged:
        return Verdict(True)
    return _fail(new_models=sorted(rhs - merged, key=lambda m: m.bits))


def check_postulate(
    postulate: str,
    cfg: OperatorConfig,
    inst: Instance,
    *,
    other: Instance | None = None,
    permutation: Sequence[int] | None = None,
    mu_prime: Formula | None = None,
    split: int | None = None,
    scheme_left: WeightScheme | None = None,
    scheme_right: WeightScheme | None = None,
) -> Verdict:
    """Dispatch a postulate id to its checker, validating the aux inputs."""
    postulate = postulate.lower()
    if postulate == "ic0":
        return check_ic0(cfg, inst)
    if postulate == "ic1":
        return check_ic1(cfg, inst)
    if postulate == "ic2":
        return check_ic2(cfg, inst)
    if postulate == "ic3":
        if other is None:
            raise ValueError("ic3 needs a second, equivalent instance")
        return check_ic3(cfg, inst, other, permutation)
    if postulate == "ic4":
        return check_ic4(cfg, inst)
    if postulate in ("ic5", "ic6"):
        if split is None:
            raise ValueError(f"{postulate} needs a profile split point")
        left = scheme_left if scheme_left is not None else cfg.scheme
        right = scheme_right if scheme_right is not None else cfg.scheme
        fn = check_ic5 if postulate == "ic5" else check_ic6
        return fn(cfg.kind, inst, split, left, right)
    if postulate in ("ic7", "ic8"):
        if mu_prime is None:
            raise ValueError(f"{postulate} needs the extra constraint mu'")
        fn = check_ic7 if postulate == "ic7" else check_ic8
        return fn(cfg, inst, mu_prime)
    raise ValueError(f"unknown postulate {postulate!r}")


# --- beyond IC0-IC8 --------------------------------------------------------


def closest_pairs_merge(
    universe: Universe,
    f1: Formula,
    f2: Formula,
    max_vars: int = DEFAULT_MAX_VARS,
) -> frozenset[Model]:
    """Arbitration by closest pairs: all models appearing in some pair of
    (Mod(f1) x Mod(f2)) of minimal Hamming distance."""
    m1 = models_of(f1, universe, max_vars)
    m2 = models_of(f2, universe, max_vars)
    if not m1 or not m2:
        raise UnsatisfiableFormulaError("closest pairs need satisfiable formulae")
    hamming = DistanceKind.hamming()
    best = None
    chosen: set[Model] = set()
    for i in m1:
        for j in m2:
            d = model_distance(hamming, i, j)
            if best is None or d < best:
                best = d
                chosen = {i, j}
            elif d == best:
                chosen.add(i)
                chosen.add(j)
    return frozenset(chosen)


def check_majority(
    cfg: OperatorConfig,
    universe: Universe,
    f1: Formula,
    f2: Formula,
    reps: int,
    max_vars: int = DEFAULT_MAX_VARS,
) -> Verdict:
    """Whether repeating f2 ``reps`` times forces the merge to entail it."""
    if reps < 1:
        raise ValueError("reps must be at least 1")
    inst = Instance(universe, TRUE, [f1] + [f2] * reps, max_vars)
    merged = _merged(cfg, inst)
    stray = [m for m in merged if not evaluate(f2, m)]
    if not stray:
        return Verdict(True)
    return _fail(models=sorted(stray, key=lambda m: m.bits))


def check_disjunctive(cfg: OperatorConfig, inst: Instance) -> Verdict:
    """Every merged model satisfies at least one profile entry."""
    mu_table = truth_table(inst.constraints, inst.universe, inst.max_vars)
    for f in inst.profile:
        if not (truth_table(f, inst.universe, inst.max_vars) & mu_table).any():
            return Verdict(True, vacuous=True)
    merged = _merged(cfg, inst)
    stray = [
        m for m in merged if not any(evaluate(f, m) for f in inst.profile)
    ]
    if not stray:
        return Verdict(True)
    return _fail(models=sorted(stray, key=lambda m: m.bits))


def check_arbitration_duplicate(cfg: OperatorConfig, inst: Instance) -> Verdict:
    """Duplicating the last source must not change the all-positive merge."""
    if not isinstance(cfg.scheme, AllPositiveWeights):
        raise ValueError("duplicate invariance is only claimed for the all-positive scheme")
    doubled = Instance(
        inst.universe,
        inst.constraints,
        list(inst.profile) + [inst.profile[-1]],
        inst.max_vars,
    )
    a = _merged(cfg, inst)
    b = _merged(cfg, doubled)
    if a == b:
        return Verdict(True)
    return _fail(base=sorted(a, key=lambda m: m.bits),
                 doubled=sorted(b, key=lambda m: m.bits))
