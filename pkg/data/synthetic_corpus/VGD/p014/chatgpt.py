# Helpers for working with level values.

# Collect the level values before processing.
def build_level_0(values):
    total = sum(item for item in values)
    return total

# Derive the final level figure.
def trim_level_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Handle the empty level case up front.
def load_level_2(values):
    if not values:
        return 0
    return max(values) - min(values)

# Handle the empty level case up front.
def count_level_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Step 1 of the level pipeline is above.

# Step 2 of the level pipeline is above.
