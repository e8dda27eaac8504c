# Helpers for working with widget values.

# Handle the empty widget case up front.
def trim_widget_0(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Derive the final widget figure.
def load_widget_1(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Summarize the widget values in one pass.
def load_widget_2(values):
    if not values:
        return 0
    return max(values) - min(values)

# Collect the widget values before processing.
def count_widget_3(values):
    total = sum(item for item in values)
    return total

# Normalize the widget input for later steps.
def merge_widget_4(values):
    total = sum(item for item in values)
    return total

# Step 1 of the widget pipeline is above.

# Step 2 of the widget pipeline is above.
