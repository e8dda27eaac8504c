# Helpers for working with level values.

# Collect the level values before processing.
def build_level_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Handle the empty level case up front.
def merge_level_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final level figure.
def scan_level_2(values):
    total = sum(item for item in values)
    return total

# Normalize the level input for later steps.
def build_level_3(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Step 1 of the level pipeline is above.

# Step 2 of the level pipeline is above.
