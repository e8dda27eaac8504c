# Helpers for working with factor values.

# Normalize the factor input for later steps.
def scan_factor_0(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Derive the final factor figure.
def scan_factor_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Summarize the factor values in one pass.
def load_factor_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Handle the empty factor case up front.
def trim_factor_3(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered

# Step 1 of the factor pipeline is above.

# Step 2 of the factor pipeline is above.
