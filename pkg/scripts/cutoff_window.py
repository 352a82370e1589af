"""Show the l2 cutoff window for the independent walk at sizes where the
full spectrum is far out of reach.

For each n the windowed evaluator brackets n-normalized l2^2 around the
threshold k0 = ceil((1/2) n log n + (1/4) n log(|G|-1)); the certified
envelope forces decay by at least e^{-4c} per cn extra steps.
"""
import argparse
import math

from wreathwalk.bounds import envelope_decay_certificate, l2n_sq_collapsed_bounds


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--g-order", type=int, default=2)
    ap.add_argument("--ns", default="50,100,200,400")
    args = ap.parse_args()

    a = args.g_order
    for n in (int(x) for x in args.ns.split(",")):
        k0 = math.ceil(0.5 * n * math.log(n) + (0.25 * n * math.log(a - 1) if a > 1 else 0.0))
        print(f"n={n}  |G|={a}  k0={k0}")
        for c in (-1.0, -0.5, 0.0, 0.5, 1.0, 2.0):
            k = k0 + math.ceil(c * n)
            if k < 0:
                continue
            lo, hi = l2n_sq_collapsed_bounds(a, n, k)
            print(f"  k0{c:+5.1f}n  k={k:7d}   l2n_sq in [{lo:10.3e}, {hi:10.3e}]")
        lhs, rhs = envelope_decay_certificate(a, n, 1.0, k0=k0)
        ok = "ok" if lhs <= rhs * (1 + 1e-6) else "VIOLATED"
        print(f"  envelope: hi(k0+n) = {lhs:.3e} <= e^-4 * lo(k0) = {rhs:.3e}  [{ok}]")


if __name__ == "__main__":
    main()
