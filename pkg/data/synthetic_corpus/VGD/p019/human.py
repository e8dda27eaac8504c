def main():
    level_0 = 11
    level_1 = level_0 + 2
    if level_1 > 10:
        level_2 = level_1 - 1
    else:
        level_2 = level_1 + 1
    level_3 = level_2 - 7 + 7 * 2
    level_4 = level_3 + 3
    level_5 = level_4 * 2 - 1
    # level values
    if level_5 > 80:
        level_6 = level_5 - 8
    else:
        level_6 = level_5 + 8
    level_7 = level_6 - 2 + 2 * 2
    level_8 = level_7 - 5 + 5 * 2
    level_9 = level_8 - 1 + 1 * 2
    level_10 = level_9 - 4 + 4 * 2
    if level_10 > 70:
        level_11 = level_10 - 7
    else:
        level_11 = level_10 + 7
    level_12 = level_11 - 7 + 7 * 2
    level_13 = level_12 * 2 - 6
    level_14 = level_13 * 2 - 1
    level_15 = level_14 - 4 + 4 * 2
    level_16 = level_15 * 2 - 8
    if level_16 > 60:
        level_17 = level_16 - 6
    else:
        level_17 = level_16 + 6
    if level_17 > 70:
        level_18 = level_17 - 7
    else:
        level_18 = level_17 + 7
    if level_18 > 50:
        level_19 = level_18 - 5
    else:
        level_19 = level_18 + 5
    level_20 = level_19 * 2 - 1
    level_21 = level_20 + 3
    level_22 = level_21 + 3
    # level values
    level_23 = level_22 + 8
    level_24 = level_23 + 5
    level_25 = level_24 - 7 + 7 * 2
    level_26 = level_25 * 2 - 8
    print(level_26)

main()
