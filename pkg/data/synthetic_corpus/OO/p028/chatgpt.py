# Helpers for working with shape values.

# Derive the final shape figure.
def load_shape_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Keep only the useful part of the shape data.
def load_shape_1(values):
    total = sum(item for item in values)
    return total

# Derive the final shape figure.
def count_shape_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final shape figure.
def scan_shape_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Keep only the useful part of the shape data.
def merge_shape_4(values):
    total = sum(item for item in values)
    return total

# Step 1 of the shape pipeline is above.

# Step 2 of the shape pipeline is above.
