"""Compare the compiled tower kernel with the pure-Python fallback.

Each mode runs in its own interpreter because the kernel is chosen at
import time.  The workload is fixed: field arithmetic on nested radicals
plus a batch of geometric multiplications on the x-axis.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, time
from euclid_kernel.field import kernel
from euclid_kernel.field.backend import CONSTRUCTIBLE as F
from euclid_kernel.geometry import arithmetic as ar
from euclid_kernel.geometry.frame import Frame

rng = random.Random(7)
xs = [F.coerce(rng.randint(-9, 9)) + F.coerce(rng.randint(1, 4)) * F.sqrt(F.coerce(k))
      for k in (2, 3, 5, 7, 11, 13) for _ in range(4)]
f = Frame.standard(F)

t0 = time.perf_counter()
acc = F.one
for x in xs:
    for y in xs:
        acc = acc * (x + y) + x * y
    r = F.recip(x)
    if r is not None:
        acc = acc * r
field_s = time.perf_counter() - t0

t0 = time.perf_counter()
for x in xs[:8]:
    ar.geo_mul(f.axis_point(x), f.axis_point(x + F.one), f)
geo_s = time.perf_counter() - t0
print(json.dumps({"compiled": kernel.COMPILED, "field": field_s, "geometry": geo_s}))
"""


def run(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("EUCLID_KERNEL_PURE", None)
    if pure:
        env["EUCLID_KERNEL_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True,
                         capture_output=True, text=True).stdout
    return json.loads(out)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    rows = {}
    for label, pure in (("compiled", False), ("pure", True)):
        runs = [run(pure) for _ in range(args.repeat)]
        if label == "compiled" and not runs[0]["compiled"]:
            print("compiled kernel not available; build it with "
                  "`python setup.py build_ext --inplace`")
            label = "fallback (no extension)"
        rows[label] = {k: min(r[k] for r in runs) for k in ("field", "geometry")}
    print(f"{'kernel':<24}{'field (s)':>12}{'geometry (s)':>14}")
    for label, r in rows.items():
        print(f"{label:<24}{r['field']:>12.3f}{r['geometry']:>14.3f}")
    if "compiled" in rows and "pure" in rows:
        for k in ("field", "geometry"):
            print(f"speedup {k}: {rows['pure'][k] / rows['compiled'][k]:.2f}x")


if __name__ == "__main__":
    main()
