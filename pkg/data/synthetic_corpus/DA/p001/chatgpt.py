# Helpers for working with column values.

# Normalize the column input for later steps.
def trim_column_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Keep only the useful part of the column data.
def build_column_1(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Collect the column values before processing.
def trim_column_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Keep only the useful part of the column data.
def scan_column_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Collect the column values before processing.
def scan_column_4(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Step 1 of the column pipeline is above.

# Step 2 of the column pipeline is above.
