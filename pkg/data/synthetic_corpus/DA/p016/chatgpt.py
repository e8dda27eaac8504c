# Helpers for working with series values.

# Normalize the series input for later steps.
def scan_series_0(values):
    total = sum(item for item in values)
    return total

# Handle the empty series case up front.
def build_series_1(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Keep only the useful part of the series data.
def build_series_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty series case up front.
def scan_series_3(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final series figure.
def trim_series_4(values):
    if not values:
        return 0
    return max(values) - min(values)
