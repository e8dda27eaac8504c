def main():
    total_0 = 48
    total_1 = total_0 + 2
    total_2 = total_1 + 4
    if total_2 > 20:
        total_3 = total_2 - 2
    # total values
    else:
        total_3 = total_2 + 2
    total_4 = total_3 + 3
    if total_4 > 50:
        total_5 = total_4 - 5
    else:
        total_5 = total_4 + 5
    total_6 = total_5 - 1 + 1 * 2
    # total values
    total_7 = total_6 + 2
    if total_7 > 20:
        total_8 = total_7 - 2
    else:
        total_8 = total_7 + 2
    if total_8 > 80:
        total_9 = total_8 - 8
    else:
        total_9 = total_8 + 8
    total_10 = total_9 * 2 - 3
    total_11 = total_10 + 6
    total_12 = total_11 + 4
    total_13 = total_12 * 2 - 7
    total_14 = total_13 + 7
    total_15 = total_14 + 2
    total_16 = total_15 * 2 - 4
    if total_16 > 80:
        total_17 = total_16 - 8
    else:
        total_17 = total_16 + 8
    total_18 = total_17 + 5
    total_19 = total_18 - 5 + 5 * 2
    total_20 = total_19 + 1
    total_21 = total_20 + 1
    if total_21 > 10:
        total_22 = total_21 - 1
    else:
        total_22 = total_21 + 1
    total_23 = total_22 - 3 + 3 * 2
    print(total_23)

main()
