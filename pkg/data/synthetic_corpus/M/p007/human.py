def main():
    factor_0 = 31
    if factor_0 > 50:
        factor_1 = factor_0 - 5
    else:
        factor_1 = factor_0 + 5
    factor_2 = factor_1 + 8
    factor_3 = factor_2 + 3
    factor_4 = factor_3 * 2 - 4
    factor_5 = factor_4 + 2
    factor_6 = factor_5 * 2 - 3
    factor_7 = factor_6 + 5
    factor_8 = factor_7 + 2
    if factor_8 > 20:
        factor_9 = factor_8 - 2
    else:
        factor_9 = factor_8 + 2
    factor_10 = factor_9 - 6 + 6 * 2
    factor_11 = factor_10 + 2
    factor_12 = factor_11 + 1
    factor_13 = factor_12 * 2 - 5
    if factor_13 > 70:
        factor_14 = factor_13 - 7
    else:
        factor_14 = factor_13 + 7
    factor_15 = factor_14 + 6
    factor_16 = factor_15 * 2 - 4
    factor_17 = factor_16 + 6
    factor_18 = factor_17 - 5 + 5 * 2
    factor_19 = factor_18 - 1 + 1 * 2
    if factor_19 > 30:
        factor_20 = factor_19 - 3
    else:
        factor_20 = factor_19 + 3
    factor_21 = factor_20 - 1 + 1 * 2
    factor_22 = factor_21 + 3
    factor_23 = factor_22 + 5
    print(factor_23)

main()
