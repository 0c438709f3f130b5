"""Compare the compiled and pure-Python kernels on eval_chain.

    python benchmarks/compare_backends.py --bits 512 --n 4,8,16,32 --reps 5
    python benchmarks/compare_backends.py --named modp1536 --n 4,8,16

Prints one line per (backend, n) with the best-of-reps wall time and the
speedup of the compiled kernel over the pure-Python one.
"""

import argparse
import random
import time

from olt import kernels
from olt.bench import random_closed_function
from olt.elgamal import keygen
from olt.group import counting, generate_params, named_group
from olt.table import build_lookup_matrix, encode, eval_chain


def main():
    ap = argparse.ArgumentParser()
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--bits", type=int, default=512)
    src.add_argument("--named")
    ap.add_argument("--n", default="4,8,16,32")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    params = named_group(args.named) if args.named else generate_params(args.bits, rng)
    kp = keygen(params, rng)
    sizes = [int(v) for v in args.n.split(",")]
    print(f"group: {params.bits} bits; backends: {', '.join(kernels.available())}")
    print(f"{'n':>4} {'exps':>7} " + " ".join(f"{b + ' ms':>12}" for b in kernels.available()) + "   speedup")
    for n in sizes:
        spec = random_closed_function(n, params, rng)
        L = build_lookup_matrix(spec, params, rng)
        enc = encode(spec.xs[0], n, kp.pk, params, rng)
        best = {}
        for backend in kernels.available():
            with kernels.use_backend(backend):
                samples = []
                for _ in range(args.reps):
                    with counting() as counter:
                        t0 = time.perf_counter()
                        eval_chain(enc, L)
                        samples.append(time.perf_counter() - t0)
                best[backend] = min(samples) * 1e3
        speedup = best["python"] / best["compiled"] if "compiled" in best else float("nan")
        cells = " ".join(f"{best[b]:12.2f}" for b in kernels.available())
        print(f"{n:>4} {counter.count:>7} {cells}   {speedup:6.1f}x")


if __name__ == "__main__":
    main()
