#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# High-precision reference values for the z-dipole E_z kernel.
#
# Evaluates the closed-form Hertzian dipole spherical components with mpmath
# at 40 significant digits and writes one line per sample:
#
#   sx sy sz ox oy oz k p0_re p0_im ez_re ez_im
#
# Inputs are written with repr() so the C++ side parses the exact same doubles.
# Regenerate with:  python3 tests/oracle/dipole_oracle.py > tests/data/dipole_oracle.txt

import random

import mpmath as mp

mp.mp.dps = 40

C0 = mp.mpf(299792458)
ETA = mp.mpf("376.730")


def ez(src, obs, k, p0):
    dx, dy, dz = (mp.mpf(o) - mp.mpf(s) for s, o in zip(src, obs))
    r = mp.sqrt(dx * dx + dy * dy + dz * dz)
    cos_t = dz / r
    sin_t = mp.sqrt(dx * dx + dy * dy) / r
    k = mp.mpf(k)
    kr = k * r
    j = mp.mpc(0, 1)
    phase = mp.exp(-j * kr)
    e_r = ETA * p0 * cos_t / (2 * mp.pi * r * r) * (1 + 1 / (j * kr)) * phase
    e_t = j * ETA * k * p0 * sin_t / (4 * mp.pi * r) * (1 + 1 / (j * kr) - 1 / (kr * kr)) * phase
    return e_r * cos_t - e_t * sin_t


def main():
    rng = random.Random(20240611)
    print("# sx sy sz ox oy oz k p0_re p0_im ez_re ez_im")
    n = 0
    while n < 1000:
        src = [rng.uniform(-1.0, 6.0) for _ in range(3)]
        obs = [rng.uniform(-1.0, 6.0) for _ in range(3)]
        d2 = sum((a - b) ** 2 for a, b in zip(src, obs))
        if d2 < 0.01:
            continue
        f = rng.uniform(0.5e9, 6.0e9)
        k = float(2 * mp.pi * mp.mpf(f) / C0)
        p0 = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
        val = ez(src, obs, k, mp.mpc(p0.real, p0.imag))
        fields = [repr(x) for x in src + obs + [k, p0.real, p0.imag]]
        fields += [mp.nstr(val.real, 25), mp.nstr(val.imag, 25)]
        print(" ".join(fields))
        n += 1


if __name__ == "__main__":
    main()
