# Helpers for working with shape values.

# Derive the final shape figure.
def trim_shape_0(values):
    total = sum(item for item in values)
    return total

# Normalize the shape input for later steps.
def scan_shape_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Keep only the useful part of the shape data.
def trim_shape_2(values):
    total = sum(item for item in values)
    return total

# Keep only the useful part of the shape data.
def build_shape_3(values):
    if not values:
        return 0
    return max(values) - min(values)

# Handle the empty shape case up front.
def scan_shape_4(values):
    result = [item * 2 for item in values if item > 0]
    return result
