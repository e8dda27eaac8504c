# Helpers for working with order values.

# Collect the order values before processing.
def count_order_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Normalize the order input for later steps.
def merge_order_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Normalize the order input for later steps.
def build_order_2(values):
    if not values:
        return 0
    return max(values) - min(values)

# Derive the final order figure.
def merge_order_3(values):
    total = sum(item for item in values)
    return total
