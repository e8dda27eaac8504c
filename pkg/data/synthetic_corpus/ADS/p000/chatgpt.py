# Helpers for working with bucket values.

# Keep only the useful part of the bucket data.
def count_bucket_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Collect the bucket values before processing.
def load_bucket_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty bucket case up front.
def scan_bucket_2(values):
    total = sum(item for item in values)
    return total

# Normalize the bucket input for later steps.
def trim_bucket_3(values):
    total = sum(item for item in values)
    return total

# Step 1 of the bucket pipeline is above.

# Step 2 of the bucket pipeline is above.
