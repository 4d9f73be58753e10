"""Operation-count benchmark and run reports."""
from __future__ import annotations

import time

import numpy as np

from .perm import GroupSpec, shroud
from .recognizer import RecognitionOutcome, recognise


def trial_seeds(seed: int, trials: int) -> list[np.random.SeedSequence]:
    """Per-trial seed streams: child i of the root SeedSequence(seed)."""
    return np.random.SeedSequence(seed).spawn(trials)


def run_report(spec: GroupSpec, outcome: RecognitionOutcome, *, epsilon: float, N: int,
               seed: int, wall_time: float) -> dict:
    phases = {name: c.as_dict() for name, c in outcome.phases.items()}
    report = {
        "status": outcome.status,
        "degree": outcome.degree,
        "kind": outcome.kind,
        "epsilon": epsilon,
        "N": N,
        "seed": seed,
        "group": spec.to_json(),
        "generator_images": [list(p.images) for p in outcome.generator_images],
        "certification": None,
        "counters": outcome.counters.as_dict(),
        "phase_breakdown": phases,
        "passes": outcome.passes,
        "candidates_tried": outcome.candidates_tried,
        "peak_stored_elements": outcome.peak_stored_elements,
        "reason": outcome.reason,
        "wall_time": wall_time,
    }
    if outcome.success:
        report["certification"] = {"verdict": outcome.kind,
                                   "generators_checked": len(outcome.generator_images)}
    return report


def ops_excluding_certification(outcome: RecognitionOutcome) -> int:
    cert = outcome.phases.get("certification")
    return outcome.counters.total - (cert.total if cert else 0)


def loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def bench(degrees: list[int], trials: int, seed: int, kind: str = "alt",
          epsilon: float = 0.1) -> dict:
    """Recognise Alt_N (or Sym_N) with n = N for each N in ``degrees``."""
    if trials < 1:
        raise ValueError("trials must be positive")
    if not degrees or min(degrees) < 9:
        raise ValueError("degrees must be at least 9")
    rows = []
    for d_index, N in enumerate(degrees):
        seeds = np.random.SeedSequence([seed, d_index]).spawn(trials)
        ops, peaks, succ = [], [], 0
        t0 = time.perf_counter()
        for ss in seeds:
            G = shroud(GroupSpec(kind, N), ss)
            out = recognise(G, epsilon, N)
            succ += out.success and out.degree == N
            ops.append(ops_excluding_certification(out))
            peaks.append(out.peak_stored_elements)
        rows.append({"N": N, "trials": trials, "successes": succ,
                     "mean_ops_excluding_certification": sum(ops) / trials,
                     "max_peak_stored_elements": max(peaks),
                     "wall_time": time.perf_counter() - t0})
    result = {"kind": kind, "epsilon": epsilon, "seed": seed, "degrees": rows}
    if len(degrees) >= 2:
        result["loglog_slope"] = loglog_slope([r["N"] for r in rows],
                                              [r["mean_ops_excluding_certification"] for r in rows])
    return result


def timed_recognise(spec: GroupSpec, epsilon: float, N: int, seed: int):
    G = shroud(spec, seed)
    t0 = time.perf_counter()
    out = recognise(G, epsilon, N)
    return out, time.perf_counter() - t0


__all__ = ["bench", "loglog_slope", "run_report", "timed_recognise", "trial_seeds",
           "ops_excluding_certification"]
