# Helpers for working with level values.

# Summarize the level values in one pass.
def count_level_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Derive the final level figure.
def scan_level_1(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Summarize the level values in one pass.
def load_level_2(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Step 1 of the level pipeline is above.
