# Helpers for working with digit values.

# Handle the empty digit case up front.
def scan_digit_0(values):
    total = sum(item for item in values)
    return total

# Normalize the digit input for later steps.
def build_digit_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Derive the final digit figure.
def trim_digit_2(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Step 1 of the digit pipeline is above.

# Step 2 of the digit pipeline is above.
