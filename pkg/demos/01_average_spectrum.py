"""Exact ensemble-average weight spectra, end to end.

The average is taken over every unit upper-triangular pre-transform with
i.i.d. fair-coin off-diagonal entries. The recursion delivers the result
as exact dyadic rationals, so nothing here is a float until we choose to
render one.
"""

from polarspec import avg_nmin, avg_spectrum, construct_pw, construct_rm

rm = construct_rm(128, 64)
spec = avg_spectrum(rm, d_max=24)
print("Reed-Muller style selection, N=128 K=64")
print("  first information rows:", rm.info_set[:6], "...")
for d in range(2, 25, 2):
    val = spec[d]
    if val:
        print(f"  E[N_{d}] = {val.num}/2^{val.exp} = {val.decimal(5)}")

# The polarized-weight ranking trades the weight-16 bulge for a small
# population of weight-8 codewords.
pw = construct_pw(128, 64)
spec = avg_spectrum(pw, d_max=16)
print("\nPolarized-weight selection, N=128 K=64")
for d in (8, 10, 12, 14, 16):
    print(f"  E[N_{d}] = {spec[d].decimal(4)}")

# Minimum-weight multiplicities stay cheap far beyond enumeration range:
# only the minimum-weight rows contribute, each with a power-of-two
# attainment probability.
for n, k in ((512, 256), (1024, 512), (4096, 2048)):
    d_min, value = avg_nmin(construct_rm(n, k))
    print(f"\nN={n} K={k}: d_min = {d_min}, E[N_dmin] = {value.decimal(2)}")
