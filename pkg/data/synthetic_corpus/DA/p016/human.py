def main():
    column_0 = 42
    column_1 = column_0 - 2 + 2 * 2
    column_2 = column_1 * 2 - 7
    column_3 = column_2 * 2 - 1
    column_4 = column_3 + 2
    if column_4 > 70:
        column_5 = column_4 - 7
    else:
        column_5 = column_4 + 7
    column_6 = column_5 + 6
    column_7 = column_6 + 6
    column_8 = column_7 - 3 + 3 * 2
    column_9 = column_8 * 2 - 3
    column_10 = column_9 - 8 + 8 * 2
    column_11 = column_10 - 4 + 4 * 2
    column_12 = column_11 + 6
    column_13 = column_12 * 2 - 6
    if column_13 > 60:
        column_14 = column_13 - 6
    else:
        column_14 = column_13 + 6
    column_15 = column_14 - 4 + 4 * 2
    if column_15 > 80:
        column_16 = column_15 - 8
    else:
        column_16 = column_15 + 8
    if column_16 > 20:
        column_17 = column_16 - 2
    # column values
    else:
        column_17 = column_16 + 2
    column_18 = column_17 + 1
    column_19 = column_18 + 4
    if column_19 > 70:
        column_20 = column_19 - 7
    else:
        column_20 = column_19 + 7
    column_21 = column_20 + 6
    column_22 = column_21 * 2 - 6
    column_23 = column_22 - 2 + 2 * 2
    if column_23 > 40:
        column_24 = column_23 - 4
    else:
        column_24 = column_23 + 4
    column_25 = column_24 + 1
    column_26 = column_25 * 2 - 6
    # column values
    column_27 = column_26 * 2 - 6
    column_28 = column_27 + 5
    column_29 = column_28 - 4 + 4 * 2
    column_30 = column_29 * 2 - 6
    column_31 = column_30 + 3
    column_32 = column_31 + 7
    print(column_32)

main()
