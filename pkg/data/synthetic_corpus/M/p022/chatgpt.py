# Helpers for working with factor values.

# Collect the factor values before processing.
def count_factor_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Keep only the useful part of the factor data.
def scan_factor_1(values):
    total = sum(item for item in values)
    return total

# Collect the factor values before processing.
def build_factor_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Collect the factor values before processing.
def load_factor_3(values):
    total = sum(item for item in values)
    return total
