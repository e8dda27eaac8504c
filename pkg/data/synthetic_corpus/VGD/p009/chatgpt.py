# Helpers for working with sprite values.

# Derive the final sprite figure.
def scan_sprite_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Summarize the sprite values in one pass.
def scan_sprite_1(values):
    total = sum(item for item in values)
    return total

# Derive the final sprite figure.
def build_sprite_2(values):
    total = sum(item for item in values)
    return total

# Normalize the sprite input for later steps.
def load_sprite_3(values):
    if not values:
        return 0
    return max(values) - min(values)

# Step 1 of the sprite pipeline is above.
