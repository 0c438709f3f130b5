"""Cost measurement for table construction and evaluation."""

from __future__ import annotations

import csv
import time
from dataclasses import astuple, dataclass
from typing import Iterable, List

from .elgamal import keygen
from .errors import TableTooLarge
from .group import GroupParams, counting
from .table import FunctionSpec, build_lookup_matrix, encode, eval_chain, eval_single

CSV_HEADER = ["operation", "n", "group_bits", "exponentiation_count", "wall_time_ms"]
OPERATIONS = ("eval_chain", "eval_single", "build")


@dataclass(frozen=True)
class BenchRecord:
    operation: str
    n: int
    group_bits: int
    exponentiation_count: int
    wall_time_ms: float


def random_closed_function(n: int, params: GroupParams, rng) -> FunctionSpec:
    """Random ``f: X -> X`` on ``n`` distinct random exponents."""
    if n >= params.q:
        raise TableTooLarge(f"n = {n} must be smaller than q")
    xs = set()
    while len(xs) < n:
        xs.add(rng.randrange(params.q))
    xs = sorted(xs)
    return FunctionSpec(tuple((x, rng.choice(xs)) for x in xs))


def run(
    params: GroupParams,
    ns: Iterable[int],
    repetitions: int,
    rng,
    operations: Iterable[str] = ("eval_chain",),
) -> List[BenchRecord]:
    """One record per (n, operation, repetition); runs are sequential."""
    operations = list(operations)
    for op in operations:
        if op not in OPERATIONS:
            raise ValueError(f"unknown operation {op!r}")
    ns = list(ns)
    for n in ns:
        if n < 1 or n >= params.q:
            raise TableTooLarge(f"n = {n} must lie in [1, q)")
    kp = keygen(params, rng)
    records = []
    for n in ns:
        spec = random_closed_function(n, params, rng)
        L = build_lookup_matrix(spec, params, rng)
        enc = encode(rng.choice(spec.xs), n, kp.pk, params, rng)
        for op in operations:
            for _ in range(repetitions):
                with counting() as counter:
                    start = time.perf_counter()
                    if op == "eval_chain":
                        eval_chain(enc, L)
                    elif op == "eval_single":
                        eval_single(enc, L.column(1 % n))
                    else:
                        build_lookup_matrix(spec, params, rng)
                    elapsed = time.perf_counter() - start
                records.append(BenchRecord(op, n, params.bits, counter.count, elapsed * 1e3))
    return records


def write_csv(records: Iterable[BenchRecord], fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(CSV_HEADER)
    for rec in records:
        op, n, bits, count, ms = astuple(rec)
        writer.writerow([op, n, bits, count, f"{ms:.3f}"])


def read_csv(fh) -> List[BenchRecord]:
    reader = csv.DictReader(fh)
    return [
        BenchRecord(
            row["operation"],
            int(row["n"]),
            int(row["group_bits"]),
            int(row["exponentiation_count"]),
            float(row["wall_time_ms"]),
        )
        for row in reader
    ]
