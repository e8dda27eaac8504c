# Helpers for working with sprite values.

# Normalize the sprite input for later steps.
def merge_sprite_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Normalize the sprite input for later steps.
def scan_sprite_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Collect the sprite values before processing.
def trim_sprite_2(values):
    if not values:
        return 0
    return max(values) - min(values)
