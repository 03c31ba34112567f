"""Size guards keeping the exhaustive scans at desk scale.

TABLE_GUARD bounds frame sizes for which the n x n tables are built.
SUBSET_GUARD bounds every 2**n powerset scan (sublocale enumeration,
ideal enumeration, the frame-law and compactness oracles).
"""

TABLE_GUARD = 24
SUBSET_GUARD = 16

# Exhaustive all-subfamilies Baire oracle is only run when the family of
# dense opens is at most this large (2**cap subfamilies).
FAMILY_ORACLE_CAP = 5
