# Helpers for working with column values.

# Keep only the useful part of the column data.
def count_column_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Handle the empty column case up front.
def build_column_1(values):
    total = sum(item for item in values)
    return total

# Normalize the column input for later steps.
def count_column_2(values):
    total = sum(item for item in values)
    return total

# Handle the empty column case up front.
def count_column_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered
