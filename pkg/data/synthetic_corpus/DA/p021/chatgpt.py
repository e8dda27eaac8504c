# Helpers for working with sample values.

# Derive the final sample figure.
def load_sample_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Keep only the useful part of the sample data.
def load_sample_1(values):
    total = sum(item for item in values)
    return total

# Normalize the sample input for later steps.
def load_sample_2(values):
    total = sum(item for item in values)
    return total

# Collect the sample values before processing.
def count_sample_3(values):
    result = [item * 2 for item in values if item > 0]
    return result
