# Helpers for working with factor values.

# Summarize the factor values in one pass.
def scan_factor_0(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final factor figure.
def count_factor_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Collect the factor values before processing.
def merge_factor_2(values):
    result = [item * 2 for item in values if item > 0]
    return result
