# Helpers for working with graph values.

# Keep only the useful part of the graph data.
def merge_graph_0(values):
    total = sum(item for item in values)
    return total

# Summarize the graph values in one pass.
def build_graph_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty graph case up front.
def trim_graph_2(values):
    total = sum(item for item in values)
    return total

# Keep only the useful part of the graph data.
def trim_graph_3(values):
    total = sum(item for item in values)
    return total
