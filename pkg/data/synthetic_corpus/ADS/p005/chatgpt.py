# Helpers for working with graph values.

# Normalize the graph input for later steps.
def build_graph_0(values):
    if not values:
        return 0
    return max(values) - min(values)

# Keep only the useful part of the graph data.
def merge_graph_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Collect the graph values before processing.
def merge_graph_2(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Keep only the useful part of the graph data.
def count_graph_3(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Step 1 of the graph pipeline is above.
