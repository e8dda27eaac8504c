# Helpers for working with score values.

# Keep only the useful part of the score data.
def merge_score_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Normalize the score input for later steps.
def merge_score_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Handle the empty score case up front.
def load_score_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Normalize the score input for later steps.
def scan_score_3(values):
    total = sum(item for item in values)
    return total

# Handle the empty score case up front.
def build_score_4(values):
    total = sum(item for item in values)
    return total

# Step 1 of the score pipeline is above.

# Step 2 of the score pipeline is above.
