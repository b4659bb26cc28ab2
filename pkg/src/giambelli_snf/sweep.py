"""Theorem sweeps over many (partition, decomposition, specialization) instances.

Random direction vectors come from :class:`random.Random` (Mersenne Twister)
seeded with the string ``f"{seed}:{partition}"``, so the draw for a
partition does not depend on which other partitions are in the sweep.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .outside_decomp import DirectionVector, Kind, build_decomposition, canonical_direction, num_diagonals
from .oracles import count_ssyt, q_weight_ssyt, subpartitions
from .shapes import Partition, SkewShape, partitions_up_to
from .smith import DEFAULT_MINOR_BOUND, TheoremReport, verify_theorem
from .specialize import back_substitute, get_specialization, specialized_skew_schur

WORKERS_ENV = "GIAMBELLI_SNF_WORKERS"


@dataclass(frozen=True)
class Instance:
    partition: Partition
    label: str
    direction: DirectionVector
    specialization: str


def random_directions(p: Partition, count: int, seed: int) -> list[DirectionVector]:
    """Up to ``count`` distinct direction vectors, fewer when ``p`` has fewer."""
    steps = num_diagonals(p) - 1
    total = 2**steps
    rng = random.Random(f"{seed}:{p}")
    picks = rng.sample(range(total), min(count, total))
    lo = 1 - len(p)
    return [
        DirectionVector(lo, format(x, f"0{steps}b").replace("0", "R").replace("1", "U") if steps else "")
        for x in picks
    ]


def sweep_instances(
    max_size: int,
    specializations: Sequence[str],
    *,
    kinds: Iterable[Kind | str] = tuple(Kind),
    random_decomps: int = 0,
    seed: int = 0,
    min_size: int = 1,
) -> list[Instance]:
    kinds = [Kind(k) for k in kinds]
    out = []
    for p in partitions_up_to(max_size):
        if p.size < min_size:
            continue
        decs = [(k.value, canonical_direction(p, k)) for k in kinds]
        decs += [(d.steps, d) for d in random_directions(p, random_decomps, seed)]
        for s in specializations:
            out.extend(Instance(p, label, d, s) for label, d in decs)
    return out


def _run_one(args) -> TheoremReport:
    inst, oracle, bound, both = args
    dec = build_decomposition(inst.partition, inst.direction)
    return verify_theorem(
        inst.partition,
        dec,
        inst.specialization,
        label=inst.label,
        oracle=oracle,
        bound=bound,
        both_predictions=both,
    )


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return 1


def run_instances(
    instances: Sequence[Instance],
    *,
    oracle: bool = False,
    bound: int = DEFAULT_MINOR_BOUND,
    both_predictions: bool = False,
    workers: int | None = None,
) -> list[TheoremReport]:
    """Verify every instance; results come back in input order."""
    workers = default_workers() if workers is None else workers
    jobs = [(inst, oracle, bound, both_predictions) for inst in instances]
    if workers <= 1 or len(jobs) < 2:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (8 * workers))))


def summarize(reports: Sequence[TheoremReport]) -> dict:
    mismatched = [r.to_json() for r in reports if not r.match or r.oracle_match is False]
    out = {
        "total": len(reports),
        "matched": sum(1 for r in reports if r.match),
        "oracle_checked": sum(1 for r in reports if r.oracle_checked),
        "oracle_failures": sum(1 for r in reports if r.oracle_match is False),
        "mismatched": mismatched,
    }
    cand = [r for r in reports if r.candidates is not None]
    if cand:
        tally: dict[str, dict[str, int]] = {}
        for r in cand:
            bucket = tally.setdefault(r.decomposition if r.decomposition in ("hook", "rim", "horizontal") else "random", {})
            for name, ok in r.candidates.items():
                bucket[name] = bucket.get(name, 0) + int(ok)
            bucket["instances"] = bucket.get("instances", 0) + 1
        out["candidate_matches"] = tally
    return out


def ssyt_agreement(max_size: int = 6, max_t: int = 4, specializations: Sequence[str] = ("phi-t", "q-hat")) -> dict:
    """Compare specialized (skew) Schur images with brute-force tableau counts
    for every ``mu <= lambda`` with ``|lambda| <= max_size`` and ``t <= max_t``."""
    checked = 0
    failures = []
    for lam in partitions_up_to(max_size, include_empty=True):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            for name in specializations:
                s = get_specialization(name)
                image = specialized_skew_schur(s, shape)
                for t in range(1, max_t + 1):
                    checked += 1
                    if s.name == "phi-t":
                        ok = image(t) == count_ssyt(shape, t)
                    elif s.name == "q-hat":
                        ok = back_substitute(image, t) == q_weight_ssyt(shape, t)
                    else:
                        raise ValueError(f"no tableau oracle for {s.name}")
                    if not ok:
                        failures.append({"shape": str(shape), "t": t, "specialization": s.name})
    return {"checked": checked, "failures": failures}
