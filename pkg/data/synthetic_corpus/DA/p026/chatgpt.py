# Helpers for working with frame values.

# Derive the final frame figure.
def scan_frame_0(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final frame figure.
def build_frame_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Derive the final frame figure.
def count_frame_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty frame case up front.
def build_frame_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Derive the final frame figure.
def build_frame_4(values):
    if not values:
        return 0
    return max(values) - min(values)

# Step 1 of the frame pipeline is above.

# Step 2 of the frame pipeline is above.
