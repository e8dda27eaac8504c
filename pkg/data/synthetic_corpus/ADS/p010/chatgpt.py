# Helpers for working with queue values.

# Keep only the useful part of the queue data.
def trim_queue_0(values):
    total = sum(item for item in values)
    return total

# Handle the empty queue case up front.
def count_queue_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Normalize the queue input for later steps.
def load_queue_2(values):
    if not values:
        return 0
    return max(values) - min(values)

# Summarize the queue values in one pass.
def load_queue_3(values):
    result = [item * 2 for item in values if item > 0]
    return result
