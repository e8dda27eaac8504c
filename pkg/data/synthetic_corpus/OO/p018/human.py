def main():
    widget_0 = 33
    widget_1 = widget_0 - 3 + 3 * 2
    widget_2 = widget_1 * 2 - 8
    widget_3 = widget_2 - 6 + 6 * 2
    widget_4 = widget_3 + 2
    widget_5 = widget_4 + 6
    if widget_5 > 60:
        widget_6 = widget_5 - 6
    else:
        widget_6 = widget_5 + 6
    widget_7 = widget_6 * 2 - 1
    widget_8 = widget_7 * 2 - 5
    if widget_8 > 20:
        widget_9 = widget_8 - 2
    else:
        widget_9 = widget_8 + 2
    widget_10 = widget_9 + 4
    widget_11 = widget_10 - 5 + 5 * 2
    if widget_11 > 40:
    # widget values
        widget_12 = widget_11 - 4
    else:
        widget_12 = widget_11 + 4
    widget_13 = widget_12 - 7 + 7 * 2
    widget_14 = widget_13 + 3
    if widget_14 > 80:
        widget_15 = widget_14 - 8
    else:
        widget_15 = widget_14 + 8
    widget_16 = widget_15 * 2 - 1
    widget_17 = widget_16 - 2 + 2 * 2
    widget_18 = widget_17 * 2 - 7
    widget_19 = widget_18 - 4 + 4 * 2
    widget_20 = widget_19 - 3 + 3 * 2
    if widget_20 > 60:
        widget_21 = widget_20 - 6
    else:
        widget_21 = widget_20 + 6
    widget_22 = widget_21 - 8 + 8 * 2
    widget_23 = widget_22 * 2 - 3
    widget_24 = widget_23 * 2 - 8
    widget_25 = widget_24 * 2 - 8
    if widget_25 > 60:
        widget_26 = widget_25 - 6
    # widget values
    else:
        widget_26 = widget_25 + 6
    if widget_26 > 70:
        widget_27 = widget_26 - 7
    else:
        widget_27 = widget_26 + 7
    widget_28 = widget_27 + 8
    widget_29 = widget_28 + 9
    widget_30 = widget_29 + 8
    print(widget_30)

main()
