"""Two signals of type pi whose magnitudes agree at every half-integer.

Sampling at exactly twice the bandwidth is not enough: |f1(k/2)| = |f2(k/2)|
for all k, yet f1 and f2 differ by more than a global sign.
"""
import numpy as np

from phaseless.signals import counterexample_pair


def main():
    f1, f2 = counterexample_pair()
    k = np.arange(-20, 21) / 2.0
    print(f"f1 = {f1.description}\nf2 = {f2.description}")
    print(f"{'x':>6}  {'|f1|':>8}  {'|f2|':>8}")
    for x in k[::4]:
        print(f"{x:6.1f}  {abs(f1(x)):8.5f}  {abs(f2(x)):8.5f}")
    x = np.linspace(-10, 10, 20001)
    print(f"max magnitude gap on half-integers: {np.max(np.abs(np.abs(f1(k)) - np.abs(f2(k)))):.2e}")
    print(f"sup |f1 - f2| = {np.max(np.abs(f1(x) - f2(x))):.4f}, sup |f1 + f2| = {np.max(np.abs(f1(x) + f2(x))):.4f}")


if __name__ == "__main__":
    main()
