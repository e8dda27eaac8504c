widget_0 = 12
widget_1 = widget_0 * 2 - 3
widget_2 = widget_1 - 6 + 6 * 2
widget_3 = widget_2 + 2
widget_4 = widget_3 - 3 + 3 * 2
widget_5 = widget_4 + 2
widget_6 = widget_5 - 4 + 4 * 2
widget_7 = widget_6 - 6 + 6 * 2
widget_8 = widget_7 + 7
widget_9 = widget_8 - 6 + 6 * 2
widget_10 = widget_9 * 2 - 7
if widget_10 > 80:
    widget_11 = widget_10 - 8
else:
    widget_11 = widget_10 + 8
widget_12 = widget_11 * 2 - 4
widget_13 = widget_12 + 6
widget_14 = widget_13 * 2 - 4
if widget_14 > 70:
    widget_15 = widget_14 - 7
else:
    widget_15 = widget_14 + 7
if widget_15 > 60:
    widget_16 = widget_15 - 6
else:
    widget_16 = widget_15 + 6
widget_17 = widget_16 - 7 + 7 * 2
widget_18 = widget_17 + 6
if widget_18 > 80:
    widget_19 = widget_18 - 8
else:
    widget_19 = widget_18 + 8
widget_20 = widget_19 * 2 - 7
widget_21 = widget_20 + 9
print(widget_21)
