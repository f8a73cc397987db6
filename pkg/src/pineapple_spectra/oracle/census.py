"""Classification of every pineapple on a (k, q) grid for fixed p."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..classifier import Classification, enumerate_mates
from ..graph import InvalidParams, PineappleParams

__all__ = ["Census", "JOBS_ENV", "census", "default_jobs"]

JOBS_ENV = "PINEAPPLE_JOBS"
CSV_COLUMNS = ("p", "k", "q", "das", "mate_count", "mates_json")


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    if raw == "auto":
        return os.cpu_count() or 1
    jobs = int(raw)
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV} must be a positive integer or 'auto'")
    return jobs


@dataclass(frozen=True)
class Census:
    p: int
    rows: tuple[Classification, ...]

    @property
    def das_count(self) -> int:
        return sum(c.das for c in self.rows)

    @property
    def non_das(self) -> list[Classification]:
        return [c for c in self.rows if not c.das]

    def summary(self) -> str:
        return f"DAS={self.das_count} non-DAS={len(self.non_das)}"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for c in self.rows:
            writer.writerow([c.params.p, c.params.k, c.params.q, str(c.das).lower(),
                             len(c.mates), json.dumps([m.to_dict() for m in c.mates])])
        return buf.getvalue()


def _classify(pkq: tuple[int, int, int]) -> Classification:
    return enumerate_mates(PineappleParams(*pkq))


def census(p: int, k_range: range, q_range: range, jobs: int = 1) -> Census:
    """Classify ``K_{p,k}^q`` for all ``k`` in ``k_range`` and ``q`` in ``q_range``."""
    if not k_range or not q_range:
        raise InvalidParams("empty k or q range")
    if k_range[0] < 1 or k_range[-1] > p - 2:
        raise InvalidParams(f"k range must lie in [1, {p - 2}] for p={p}")
    if q_range[0] < 1:
        raise InvalidParams("q range must start at 1 or above")
    grid = [(p, k, q) for k in k_range for q in q_range]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_classify, grid, chunksize=max(1, len(grid) // (4 * jobs))))
    else:
        rows = [_classify(pkq) for pkq in grid]
    return Census(p, tuple(rows))
