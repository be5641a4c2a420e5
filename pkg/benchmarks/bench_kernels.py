"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends are run on the same inputs and their results compared.
"""
import argparse
import time

from ncpenrose import _kernels_py, endo, kernels, multimatrix, wordalg

try:
    from ncpenrose import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def unit_cases():
    cases = []
    for r, n in [(2, 5), (1, 6)]:
        units = endo.tn_units(r, n)
        images = [endo.psi_unit_image(r, n, a, c) for a, c in units]
        cases.append((f"psi units r={r} n={n}", units, images,
                      wordalg.b(r, n), wordalg.b(r, n + 1)))
    for r, n in [(1, 8), (2, 8)]:
        m = multimatrix.penrose_tower(r, n + 1)[n]
        units, images = multimatrix.unit_images(m)
        cases.append((f"tower map r={r} X({n})", units, images,
                      len(m.target.elements), len(m.source.elements)))
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    print(f"default backend: {kernels.BACKEND}")
    print(f"{'kernel':52s} " + " ".join(f"{name:>10s}" for name, _ in impls) + "   speedup")

    rows = []
    for length, r in [(20, 1), (20, 2), (18, 3)]:
        rows.append((f"avoiding_masks len={length} r={r}",
                     [lambda impl=impl, length=length, r=r: list(impl.avoiding_masks(length, r))
                      for _, impl in impls]))
    for label, units, images, sd, td in unit_cases():
        ptr, codes = kernels.encode_images(images, td)
        rs = [a for a, _ in units]
        cs = [c for _, c in units]
        rows.append((f"unit_hom_check {label} ({len(units)} units)",
                     [lambda impl=impl, ptr=ptr, codes=codes, rs=rs, cs=cs, sd=sd, td=td:
                      impl.unit_hom_check(rs, cs, ptr, codes, sd, td) for _, impl in impls]))

    for label, fns in rows:
        times, outs = zip(*(best_of(f, args.repeat) for f in fns))
        if any(o != outs[0] for o in outs):
            raise SystemExit(f"backends disagree on {label}")
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        print(f"{label:52s} " + " ".join(f"{t:9.4f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
