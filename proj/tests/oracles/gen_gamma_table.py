"""Regenerates tests/data/gamma_oracle.inc with 30-digit mpmath values.

Abscissae are k/64 so they are exact in binary floating point.
"""
import mpmath as mp

mp.mp.dps = 40
print("// Generated by tests/oracles/gen_gamma_table.py (mpmath, 40 digits).")
print("// {x, Gamma(x)} for x = (3 + 32 i) / 64, i = 0..99.")
for i in range(100):
    x = mp.mpf(3 + 32 * i) / 64
    print("{%s, %s}," % (mp.nstr(x, 20), mp.nstr(mp.gamma(x), 25)))
