# Helpers for working with matrix values.

# Normalize the matrix input for later steps.
def count_matrix_0(values):
    total = sum(item for item in values)
    return total

# Derive the final matrix figure.
def scan_matrix_1(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Handle the empty matrix case up front.
def merge_matrix_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Normalize the matrix input for later steps.
def count_matrix_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Derive the final matrix figure.
def merge_matrix_4(values):
    result = [item * 2 for item in values if item > 0]
    return result
