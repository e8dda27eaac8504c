# Helpers for working with total values.

# Derive the final total figure.
def count_total_0(values):
    total = sum(item for item in values)
    return total

# Normalize the total input for later steps.
def build_total_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty total case up front.
def scan_total_2(values):
    if not values:
        return 0
    return max(values) - min(values)

# Normalize the total input for later steps.
def merge_total_3(values):
    if not values:
        return 0
    return max(values) - min(values)
