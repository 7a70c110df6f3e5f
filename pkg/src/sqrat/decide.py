"""Rationalizability verdicts and the conjecture scan harness.

A single square root sqrt(f) is rationalizable iff the hyperelliptic curve
z^2 = f has geometric genus zero, iff the squarefree class of f has degree
at most 2.  A set of square roots is rationalizable iff the compositum of
the corresponding quadratic extensions is, iff the multiquadratic cover
has genus zero: a unirational curve is rational (Lueroth), and over an
algebraically closed constant field a genus-zero curve has a point, so
genus zero is both necessary and sufficient.  Higher-order single roots
use the cyclic cover genus the same way.

The subset criterion checks the proven necessary condition: if a set is
rationalizable then every nonempty subset product must have squarefree
class degree at most 2.  Whether the condition is also sufficient is an
open conjecture; conjecture_scan searches random families for
disagreements between the criterion and the exact genus decision and
reports them without judging.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    EmptyFamilyError,
    FamilyTooLargeError,
    InvalidParamsError,
    ZeroRadicandError,
)
from .genus import (
    CoverSpec,
    cyclic_cover_genus,
    hyperelliptic_genus,
    multiquadratic_genus_table,
)
from .lattice import branch_count, build_branch_table
from .poly import RatFunc, UPoly
from .rationalize import Witness, greedy_rationalize

RATIONALIZABLE = "rationalizable"
NOT_RATIONALIZABLE = "not_rationalizable"
UNKNOWN = "unknown"

SUBSET_FAMILY_LIMIT = 20


@dataclass
class Verdict:
    """Decision outcome with the genus data that produced it."""

    status: str
    genus: Optional[int] = None
    rank: Optional[int] = None
    branch_count: Optional[int] = None
    failing_subset: Optional[list[int]] = None
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.status not in (RATIONALIZABLE, NOT_RATIONALIZABLE, UNKNOWN):
            raise ValueError(f"unknown verdict status {self.status!r}")
        if self.genus is not None:
            if self.status == RATIONALIZABLE and self.genus != 0:
                raise ValueError("rationalizable verdict requires genus 0")
            if self.status == NOT_RATIONALIZABLE and self.genus < 1:
                raise ValueError("negative verdict requires genus >= 1")
        if self.failing_subset is not None and self.status != NOT_RATIONALIZABLE:
            raise ValueError("failing subset only accompanies a negative verdict")


def _as_ratfunc_family(radicands: Sequence[RatFunc | UPoly]) -> list[RatFunc]:
    if len(radicands) == 0:
        raise EmptyFamilyError("the radicand family is empty")
    out = []
    for f in radicands:
        if isinstance(f, UPoly):
            f = RatFunc(f)
        if f.is_zero:
            raise ZeroRadicandError("zero radicand")
        out.append(f)
    return out


def decide_single_sqrt(f: RatFunc | UPoly) -> Verdict:
    """Rationalizability of a single square root: genus zero test."""
    [f] = _as_ratfunc_family([f])
    g = hyperelliptic_genus(f)
    status = RATIONALIZABLE if g == 0 else NOT_RATIONALIZABLE
    return Verdict(status=status, genus=g)


def decide_single_root(f: RatFunc | UPoly, e: int) -> Verdict:
    """Rationalizability of a single e-th root via the cyclic cover genus."""
    [f] = _as_ratfunc_family([f])
    g = cyclic_cover_genus(CoverSpec(f, e))
    status = RATIONALIZABLE if g == 0 else NOT_RATIONALIZABLE
    return Verdict(status=status, genus=g)


def decide_set(radicands: Sequence[RatFunc | UPoly],
               attach_witness: bool = True) -> Verdict:
    """Rationalizability of a set of square roots via the compositum genus.

    On a positive verdict a witness is attached when the greedy construction
    succeeds; its absence never changes the verdict.  The procedure is
    total on univariate input: the status is never unknown.
    """
    rads = _as_ratfunc_family(radicands)
    table = build_branch_table(rads)
    summary = branch_count(table)
    g = multiquadratic_genus_table(table)
    if g == 0:
        witness = greedy_rationalize(rads) if attach_witness else None
        return Verdict(status=RATIONALIZABLE, genus=0, rank=summary.rank,
                       branch_count=summary.branch_count, witness=witness)
    return Verdict(status=NOT_RATIONALIZABLE, genus=g, rank=summary.rank,
                   branch_count=summary.branch_count)


def subset_criterion(radicands: Sequence[RatFunc | UPoly]
                     ) -> tuple[bool, Optional[list[int]]]:
    """Check every nonempty subset product for class degree at most 2.

    Subsets are enumerated by size, then lexicographically; the first
    failing subset is returned as a 0-based index list.  Square classes
    multiply by XOR of parity rows, so the check runs on the branch table
    without forming any products.
    """
    rads = _as_ratfunc_family(radicands)
    m = len(rads)
    if m > SUBSET_FAMILY_LIMIT:
        raise FamilyTooLargeError(
            f"{m} radicands means 2^{m} subsets; the cap is {SUBSET_FAMILY_LIMIT}"
        )
    table = build_branch_table(rads)
    degrees = [b.degree for b in table.basis]
    rows = table.parity_masks(include_infinity=False)
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            mask = 0
            for i in combo:
                mask ^= rows[i]
            class_degree = 0
            j = 0
            while mask:
                if mask & 1:
                    class_degree += degrees[j]
                mask >>= 1
                j += 1
            if class_degree > 2:
                return False, list(combo)
    return True, None


# -- conjecture scan ----------------------------------------------------------


@dataclass(frozen=True)
class ScanParams:
    """Bounds for the random radicand generator."""

    max_m: int = 3
    max_factors: int = 3
    coeff_bound: int = 5

    def validate(self):
        if self.max_m < 2:
            raise InvalidParamsError("max_m must be at least 2")
        if self.max_factors < 1:
            raise InvalidParamsError("max_factors must be at least 1")
        if self.coeff_bound < 1:
            raise InvalidParamsError("coeff_bound must be at least 1")


@dataclass
class ScanReport:
    """Outcome of a deterministic scan for conjecture counterexamples."""

    seed: int
    trials: int
    agreements: int
    disagreements: list[dict] = field(default_factory=list)
    params: ScanParams = field(default_factory=ScanParams)

    def __post_init__(self):
        if self.agreements + len(self.disagreements) != self.trials:
            raise ValueError("agreements + disagreements must equal trials")


def _random_radicand(rng: random.Random, params: ScanParams) -> UPoly:
    factors = rng.randint(1, params.max_factors)
    out = UPoly.one()
    bound = params.coeff_bound
    for _ in range(factors):
        if rng.random() < 0.5:
            out = out * UPoly((rng.randint(-bound, bound), 1))
        else:
            out = out * UPoly((rng.randint(-bound, bound),
                               rng.randint(-bound, bound), 1))
    return out


def scan_trial_outcome(radicands: Sequence[RatFunc | UPoly]) -> dict:
    """Compare the subset criterion with the genus decision on one family.

    The proven direction (rationalizable implies the criterion passes) is
    enforced as a hard assertion; a violation would be a bug, not data.
    """
    rads = _as_ratfunc_family(radicands)
    verdict = decide_set(rads, attach_witness=False)
    passes, failing = subset_criterion(rads)
    if verdict.status == RATIONALIZABLE and not passes:
        raise RuntimeError(
            "proven direction violated: rationalizable family failed the "
            f"subset criterion on {[str(f) for f in rads]}"
        )
    return {
        "radicands": [str(f) for f in rads],
        "subset_pass": passes,
        "failing_subset": failing,
        "verdict": verdict.status,
        "genus": verdict.genus,
        "agreement": passes == (verdict.status == RATIONALIZABLE),
    }


def conjecture_scan(seed: int, trials: int,
                    params: ScanParams | None = None) -> ScanReport:
    """Deterministic random search for subset-criterion counterexamples.

    Each trial draws m in [2, max_m] radicands, every radicand a product of
    at most max_factors monic linear or quadratic factors with integer
    coefficients in [-coeff_bound, coeff_bound].  Per-trial RNG streams are
    derived from (seed, trial index), so the report is reproducible
    regardless of evaluation order.  Disagreements (criterion passes but
    the genus is positive, or vice versa) are recorded verbatim: any entry
    is a candidate counterexample to the conjecture, not an error.
    """
    if params is None:
        params = ScanParams()
    params.validate()
    if not isinstance(trials, int) or trials < 1:
        raise InvalidParamsError("trials must be a positive integer")
    agreements = 0
    disagreements: list[dict] = []
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        m = rng.randint(2, params.max_m)
        rads = [RatFunc(_random_radicand(rng, params)) for _ in range(m)]
        outcome = scan_trial_outcome(rads)
        if outcome["agreement"]:
            agreements += 1
        else:
            outcome["trial"] = trial
            disagreements.append(outcome)
    return ScanReport(seed=seed, trials=trials, agreements=agreements,
                      disagreements=disagreements, params=params)
