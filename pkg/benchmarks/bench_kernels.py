"""Compare the compiled and pure-Python homology kernels.

Times every distinct Koszul strand of a few scroll types (the work done by
koszul_betti without its cache) on both backends and checks they agree.

    python benchmarks/bench_kernels.py [--sigma 3,2,1] [--prime 32003] [--repeat 3]
"""
import argparse
import itertools
import time

from scrolldiv import _kernels_py

try:
    from scrolldiv import _kernels
except ImportError:
    _kernels = None

DEFAULT_SIGMAS = ["2,1", "3,2,1", "3,3,2"]


def strand_inputs(sigma):
    al, be, bl = [], [], []
    for u, s in enumerate(sigma):
        for j in range(1, s + 2):
            al.append(s + 1 - j)
            be.append(j - 1)
            bl.append(u)
    cap = sum(s * (s + 1) // 2 for s in sigma)
    keys = []
    for e in itertools.product(*[range(s + 2) for s in sigma]):
        for a in range(cap + 1):
            for b in range(cap + 1):
                keys.append((list(e), a, b))
    return al, be, bl, keys


def run(fn, al, be, bl, keys, p):
    start = time.perf_counter()
    out = [fn(al, be, bl, e, a, b, p) for e, a, b in keys]
    return time.perf_counter() - start, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sigma", action="append")
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--max-keys", type=int, default=4000,
                    help="subsample strands evenly beyond this many")
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'sigma':>8} {'vars':>4} {'strands':>7} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for text in args.sigma or DEFAULT_SIGMAS:
        sigma = tuple(int(x) for x in text.split(","))
        al, be, bl, keys = strand_inputs(sigma)
        if len(keys) > args.max_keys:
            step = -(-len(keys) // args.max_keys)
            keys = keys[::step]
        tp = min(run(_kernels_py.koszul_homology, al, be, bl, keys, args.prime)[0]
                 for _ in range(args.repeat))
        if _kernels is not None:
            results = [run(_kernels.koszul_homology, al, be, bl, keys, args.prime)
                       for _ in range(args.repeat)]
            tc = min(r[0] for r in results)
            ref = run(_kernels_py.koszul_homology, al, be, bl, keys, args.prime)[1]
            assert results[0][1] == ref, "backends disagree"
            print(f"{text:>8} {len(al):>4} {len(keys):>7} {tp:>9.3f} {tc:>9.3f} {tp / tc:>7.1f}x")
        else:
            print(f"{text:>8} {len(al):>4} {len(keys):>7} {tp:>9.3f} {'-':>9} {'-':>8}")


if __name__ == "__main__":
    main()
