"""Benchmark the compiled word kernel against the pure-Python fallback.

Micro section times the four primitives on both implementations in-process.
Macro section times rewriting and resolution workloads under the active
backend, then re-runs itself with ANICK_PURE_PYTHON=1 for the comparison.

Usage: python3 benchmarks/bench_wordops.py
"""

import json
import os
import pathlib
import random
import subprocess
import sys
import time
import timeit

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

import anick
from anick import _wordops_py

try:
    from anick import _wordops
except ImportError:
    _wordops = None


def make_cases():
    rng = random.Random(5)
    pats = tuple(tuple(rng.randrange(3) for _ in range(rng.randrange(2, 5)))
                 for _ in range(6))
    short = tuple(rng.randrange(3) for _ in range(12))
    long = tuple(rng.randrange(3) for _ in range(400))
    return pats, short, long


def micro():
    pats, short, long = make_cases()
    jobs = [
        ("find_subword short", lambda m: m.find_subword(short, pats[0])),
        ("find_subword long", lambda m: m.find_subword(long, pats[0])),
        ("first_match short", lambda m: m.first_match(short, pats)),
        ("first_match long", lambda m: m.first_match(long, pats)),
        ("all_matches long", lambda m: m.all_matches(long, pats)),
        ("is_normal short", lambda m: m.is_normal(short, pats)),
        ("is_normal long", lambda m: m.is_normal(long, pats)),
    ]
    print("primitive            python      compiled    speedup")
    for label, job in jobs:
        reps = 20000 if "short" in label else 2000
        t_py = min(timeit.repeat(lambda: job(_wordops_py),
                                 number=reps, repeat=3)) / reps
        if _wordops is None:
            print("%-20s %8.2fus   (extension not built)"
                  % (label, t_py * 1e6))
            continue
        t_c = min(timeit.repeat(lambda: job(_wordops),
                                number=reps, repeat=3)) / reps
        print("%-20s %8.2fus %9.2fus %9.1fx"
              % (label, t_py * 1e6, t_c * 1e6, t_py / t_c))


def macro():
    pres = anick.Presentation.load(ROOT / "presentations" /
                                   "running_example.json")
    rs = anick.RewriteSystem.from_presentation(pres)
    words = anick.words_up_to_weight(pres.algebra.alphabet,
                                     pres.algebra.order, 9)
    t0 = time.perf_counter()
    for w in words:
        rs.normal_form_word(w)
    t_nf = time.perf_counter() - t0

    t0 = time.perf_counter()
    eng = anick.ResolutionEngine.from_presentation(pres)
    for n in range(2, 7):
        for c in eng.chains(n):
            eng.differential(c)
    t_res = time.perf_counter() - t0
    return {"backend": anick.WORDOPS_BACKEND,
            "normal_forms_to_weight_9": t_nf,
            "differentials_to_degree_6": t_res}


def main(argv):
    if "--macro-json" in argv:
        print(json.dumps(macro()))
        return 0
    print("active backend: %s" % anick.WORDOPS_BACKEND)
    print()
    micro()
    print()
    here = macro()
    env = dict(os.environ, ANICK_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, __file__, "--macro-json"],
                         env=env, capture_output=True, text=True)
    other = json.loads(out.stdout)
    print("workload                         %-10s %-10s"
          % (here["backend"], other["backend"]))
    for key in ("normal_forms_to_weight_9", "differentials_to_degree_6"):
        print("%-32s %8.3fs  %8.3fs" % (key, here[key], other[key]))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
