# coding: utf-8

# # Checking the identities mechanically
#
# Every identity in the registry is checked with exact integer arithmetic,
# except for the logarithmic series, which is compared in floating point
# against an explicit tail bound.

from rampoly.theorems import CLAIMS, run_suite


print(len(CLAIMS), "claims")
for cid in list(CLAIMS)[:5]:
    print(cid, "-", CLAIMS[cid])


# ## A short sweep

report = run_suite(1, 60)
print(len(report.results), "results,", len(report.failures), "failures")


# Claims whose hypotheses do not hold at some n are recorded as "na" rather
# than skipped.

for cid in ("Thm4.R2", "Thm6.i", "Thm7.iv", "Thm14.iii"):
    print(cid, report.summary[cid])


# ## Filtering
#
# Prefixes pick out whole families of sub-claims.

report = run_suite(2, 100, ["Thm7"])
for cid, counts in report.summary.items():
    print(cid, counts)
