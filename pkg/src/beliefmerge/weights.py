"""Weight vectors, weight schemes and the dominance order.

Weights are strictly positive rationals internally. All comparisons the
engine makes are homogeneous, so positive-rational feasibility agrees
with the positive-integer convention once denominators are cleared;
public witnesses are always reported as integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .distance import DistanceKind

WeightVector = tuple[Fraction, ...]


def as_weight_vector(values: Sequence) -> WeightVector:
    out = tuple(Fraction(v) for v in values)
    if not out:
        raise ValueError("weight vector must be non-empty")
    for w in out:
        if w <= 0:
            raise ValueError(f"weights must be strictly positive, got {w}")
    return out


def weighted_distance(w: Sequence, d: Sequence[int]) -> Fraction:
    """Exact scalar product of a weight vector and a distance vector."""
    if len(w) != len(d):
        raise ValueError(f"length mismatch: {len(w)} weights vs {len(d)} distances")
    return sum((Fraction(wi) * di for wi, di in zip(w, d)), Fraction(0))


def dominates(d1: Sequence[int], d2: Sequence[int]) -> bool:
    """Componentwise d1 <= d2 (reflexive)."""
    if len(d1) != len(d2):
        raise ValueError(f"length mismatch: {len(d1)} vs {len(d2)}")
    return all(a <= b for a, b in zip(d1, d2))


def strictly_dominates(d1: Sequence[int], d2: Sequence[int]) -> bool:
    """Strict part of the dominance order: d1 <= d2 and d1 != d2."""
    return dominates(d1, d2) and tuple(d1) != tuple(d2)


# --- schemes ---------------------------------------------------------------


@dataclass(frozen=True)
class EqualWeights:
    """W_= : the single all-ones vector."""


@dataclass(frozen=True)
class ExpertWeights:
    """W_a : one source gets weight a, the others 1; which one is open.

    a=None defers to the distance-dependent default (see
    ``default_expert_weight``); explicit values must be >= 2.
    """

    a: int | None = None

    def __post_init__(self):
        if self.a is not None and self.a < 2:
            raise ValueError("expert weight must be at least 2")


@dataclass(frozen=True)
class AllPositiveWeights:
    """W_exists : every strictly positive weight vector (decided by LP)."""


@dataclass(frozen=True)
class ExplicitWeights:
    vectors: tuple[WeightVector, ...]

    def __init__(self, vectors):
        vecs = tuple(as_weight_vector(v) for v in vectors)
        if not vecs:
            raise ValueError("explicit scheme must list at least one vector")
        if len({len(v) for v in vecs}) > 1:
            raise ValueError("explicit scheme vectors must share one length")
        object.__setattr__(self, "vectors", vecs)


WeightScheme = Union[EqualWeights, ExpertWeights, AllPositiveWeights, ExplicitWeights]


def default_expert_weight(kind: DistanceKind, n: int, m: int) -> int:
    """Expert weight large enough to overrule all other sources combined."""
    if kind.name == "drastic":
        return m + 1
    if kind.name == "hamming":
        return n * m + 1
    # remapped distance: bound the codomain over realizable counts
    bound = max(kind.mapped(h) for h in range(n + 1))
    return bound * m + 1


def expand_scheme(scheme: WeightScheme, m: int) -> list[WeightVector] | None:
    """Finite vector list of a scheme, or None for the symbolic all-positive set."""
    if m < 1:
        raise ValueError("profile length must be at least 1")
    match scheme:
        case EqualWeights():
            return [as_weight_vector([1] * m)]
        case ExpertWeights(a):
            if a is None:
                raise ValueError("expert weight not resolved; supply a or merge via an Instance")
            return [
                as_weight_vector([a if j == i else 1 for j in range(m)])
                for i in range(m)
            ]
        case ExplicitWeights(vectors):
            for v in vectors:
                if len(v) != m:
                    raise ValueError(f"scheme vector length {len(v)} != profile length {m}")
            return list(vectors)
        case AllPositiveWeights():
            return None
    raise TypeError(f"not a weight scheme: {scheme!r}")


def parse_scheme(text: str) -> WeightScheme:
    """CLI syntax: equal | expert | expert:A | all | list:2,1;1,2"""
    if text == "equal":
        return EqualWeights()
    if text == "all":
        return AllPositiveWeights()
    if text == "expert":
        return ExpertWeights()
    if text.startswith("expert:"):
        return ExpertWeights(int(text.split(":", 1)[1]))
    if text.startswith("list:"):
        body = text.split(":", 1)[1]
        vectors = []
        for part in body.split(";"):
            vectors.append([Fraction(x) for x in part.split(",") if x])
        return ExplicitWeights(vectors)
    raise ValueError(f"unrecognized weight scheme {text!r}")


def scheme_to_text(scheme: WeightScheme) -> str:
    match scheme:
        case EqualWeights():
            return "equal"
        case AllPositiveWeights():
            return "all"
        case ExpertWeights(a):
            return "expert" if a is None else f"expert:{a}"
        case ExplicitWeights(vectors):
            return "list:" + ";".join(",".join(str(w) for w in v) for v in vectors)
    raise TypeError(f"not a weight scheme: {scheme!r}")
