# Helpers for working with bucket values.

# Collect the bucket values before processing.
def merge_bucket_0(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty bucket case up front.
def load_bucket_1(values):
    total = sum(item for item in values)
    return total

# Summarize the bucket values in one pass.
def build_bucket_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Collect the bucket values before processing.
def trim_bucket_3(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty bucket case up front.
def trim_bucket_4(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Step 1 of the bucket pipeline is above.

# Step 2 of the bucket pipeline is above.
