# Helpers for working with stack values.

# Summarize the stack values in one pass.
def trim_stack_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Keep only the useful part of the stack data.
def trim_stack_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Collect the stack values before processing.
def build_stack_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final stack figure.
def trim_stack_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Step 1 of the stack pipeline is above.

# Step 2 of the stack pipeline is above.
