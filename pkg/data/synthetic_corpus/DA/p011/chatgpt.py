# Helpers for working with series values.

# Keep only the useful part of the series data.
def scan_series_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Normalize the series input for later steps.
def merge_series_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final series figure.
def count_series_2(values):
    total = sum(item for item in values)
    return total

# Normalize the series input for later steps.
def build_series_3(values):
    total = sum(item for item in values)
    return total

# Step 1 of the series pipeline is above.

# Step 2 of the series pipeline is above.
