"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same random integer inputs under both backends;
the table shows the best time per call and the speed-up.  An end-to-end
row times real root isolation with each backend in a fresh interpreter.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from nbif.exactmath import _kernels_py

try:
    from nbif.exactmath import _kernels as _compiled
except ImportError:
    _compiled = None


def _cases(rng):
    a = [rng.randint(-10**6, 10**6) for _ in range(60)]
    b = [rng.randint(-10**6, 10**6) for _ in range(60)]
    mat = [[rng.randint(-50, 50) for _ in range(9)] for _ in range(9)]
    monic = [rng.randint(-100, 100) for _ in range(20)] + [1]
    big = [rng.randint(-10**40, 10**40) for _ in range(119)]
    return {
        "ipoly_mul (60x60)": ("ipoly_mul", (a, b)),
        "taylor_shift1 (deg 59)": ("taylor_shift1", (a,)),
        "taylor_shift s=7 (deg 59)": ("taylor_shift", (a, 7)),
        "sign_variations (deg 59)": ("sign_variations", (a,)),
        "eval_homog 3/7 (deg 59)": ("eval_homog", (a, 3, 7)),
        "bareiss_det (9x9)": ("bareiss_det", (mat,)),
        "scale_halve (deg 59)": ("scale_halve", (a,)),
        "rem_monic (118 mod 20)": ("rem_monic", (big, monic)),
    }


def _best(fn, args, repeat, number):
    return min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number)) / number


_E2E = (
    "import random, time\n"
    "from nbif.exactmath import isolate_real_roots, UniPoly\n"
    "rng = random.Random(7)\n"
    "ps = [UniPoly([rng.randint(-100, 100) for _ in range(25)]) for _ in range(40)]\n"
    "t = time.perf_counter()\n"
    "for p in ps: isolate_real_roots(p)\n"
    "print(time.perf_counter() - t)\n"
)


def _end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["NBIF_PURE_PYTHON"] = "1"
    else:
        env.pop("NBIF_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", _E2E], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    args = ap.parse_args(argv)
    rng = random.Random(2024)
    if _compiled is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':<28}{'python (us)':>14}{'cython (us)':>14}{'speed-up':>10}")
    for label, (name, fargs) in _cases(rng).items():
        tp = _best(getattr(_kernels_py, name), fargs, args.repeat, args.number)
        if _compiled is not None:
            tc = _best(getattr(_compiled, name), fargs, args.repeat, args.number)
            assert getattr(_compiled, name)(*fargs) == getattr(_kernels_py, name)(*fargs)
            print(f"{label:<28}{tp * 1e6:>14.1f}{tc * 1e6:>14.1f}{tp / tc:>9.2f}x")
        else:
            print(f"{label:<28}{tp * 1e6:>14.1f}{'-':>14}{'-':>10}")
    tp = _end_to_end(True)
    line = f"{'isolate 40 polys (deg 24)':<28}{tp * 1e3:>12.1f}ms"
    if _compiled is not None:
        tc = _end_to_end(False)
        line += f"{tc * 1e3:>12.1f}ms{tp / tc:>9.2f}x"
    print(line)


if __name__ == "__main__":
    main()
