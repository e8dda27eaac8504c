# Helpers for working with widget values.

# Keep only the useful part of the widget data.
def trim_widget_0(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Keep only the useful part of the widget data.
def merge_widget_1(values):
    if not values:
        return 0
    return max(values) - min(values)

# Summarize the widget values in one pass.
def load_widget_2(values):
    result = [item * 2 for item in values if item > 0]
    return result

# Normalize the widget input for later steps.
def merge_widget_3(values):
    total = sum(item for item in values)
    return total

# Collect the widget values before processing.
def build_widget_4(values):
    seen = set(values)
    ordered = sorted(seen)
    return ordered
