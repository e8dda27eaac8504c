# Helpers for working with shape values.

# Keep only the useful part of the shape data.
def load_shape_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Derive the final shape figure.
def load_shape_1(values):
    total = sum(item for item in values)
    return total

# Normalize the shape input for later steps.
def scan_shape_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Keep only the useful part of the shape data.
def load_shape_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Step 1 of the shape pipeline is above.
