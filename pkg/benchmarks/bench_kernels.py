"""Compare the compiled kernel against the pure-Python fallback.

Times the raw integer convolution at several sizes, then an end-to-end
curve computation under each backend (forced through RAMLOCI_PURE in a
subprocess, since the backend is chosen at import time).

Usage: python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from ramloci._kernels import _pykernels, available_backends  # noqa: E402


def bench_convolve(impl, a, b, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        impl.convolve(a, b, len(a) + len(b) - 1)
        best = min(best, time.perf_counter() - t0)
    return best


def raw_convolution():
    rng = random.Random(12345)
    impls = [("pure", _pykernels)]
    if "cython" in available_backends():
        from ramloci._kernels import _cykernels

        impls.append(("cython", _cykernels))
    print("integer convolution, best of 5 (ms)")
    header = "size".rjust(8) + "".join(name.rjust(12) for name, _ in impls) + "  speedup"
    print(header)
    for size in (64, 128, 256, 512):
        a = [rng.randint(-(10**40), 10**40) for _ in range(size)]
        b = [rng.randint(-(10**40), 10**40) for _ in range(size)]
        times = [bench_convolve(impl, a, b, 5) for _, impl in impls]
        row = str(size).rjust(8)
        for t in times:
            row += f"{t * 1000:12.2f}"
        if len(times) == 2 and times[1] > 0:
            row += f"  {times[0] / times[1]:.2f}x"
        print(row)


END_TO_END = r"""
import time
from ramloci import kernel_backend
from ramloci.cli import parse_curve
from ramloci.curves import total_weight, torsion_check

t0 = time.perf_counter()
m = parse_curve("y^2 = x^5 - 10*x^4 + 35*x^3 - 50*x^2 + 24*x")
for i in range(4):
    total_weight(m, i)
e = parse_curve("y^2 = x^3 + 1")
for j in range(1, 5):
    torsion_check(e, j)
print(f"{kernel_backend}: {time.perf_counter() - t0:.2f}s")
"""


def end_to_end():
    print()
    print("end to end: genus-2 weight suite (i<=3) + elliptic torsion (j<=4)")
    sys.stdout.flush()
    for pure in ("", "1"):
        env = dict(os.environ, RAMLOCI_PURE=pure)
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)


if __name__ == "__main__":
    raw_convolution()
    end_to_end()
