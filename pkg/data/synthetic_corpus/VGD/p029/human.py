def main():
    score_0 = 4
    score_1 = score_0 + 2
    if score_1 > 70:
        score_2 = score_1 - 7
    else:
        score_2 = score_1 + 7
    if score_2 > 10:
        score_3 = score_2 - 1
    else:
        score_3 = score_2 + 1
    score_4 = score_3 + 7
    score_5 = score_4 - 4 + 4 * 2
    score_6 = score_5 + 8
    score_7 = score_6 * 2 - 6
    score_8 = score_7 * 2 - 1
    if score_8 > 40:
        score_9 = score_8 - 4
    else:
        score_9 = score_8 + 4
    score_10 = score_9 + 7
    score_11 = score_10 - 1 + 1 * 2
    score_12 = score_11 * 2 - 6
    if score_12 > 20:
        score_13 = score_12 - 2
    else:
        score_13 = score_12 + 2
    score_14 = score_13 + 8
    score_15 = score_14 + 8
    score_16 = score_15 - 4 + 4 * 2
    score_17 = score_16 * 2 - 7
    score_18 = score_17 * 2 - 1
    score_19 = score_18 + 2
    if score_19 > 40:
        score_20 = score_19 - 4
    else:
        score_20 = score_19 + 4
    score_21 = score_20 * 2 - 8
    if score_21 > 30:
        score_22 = score_21 - 3
    else:
        score_22 = score_21 + 3
    if score_22 > 20:
        score_23 = score_22 - 2
    else:
        score_23 = score_22 + 2
    score_24 = score_23 * 2 - 7
    if score_24 > 30:
        score_25 = score_24 - 3
    else:
        score_25 = score_24 + 3
    score_26 = score_25 + 8
    score_27 = score_26 - 2 + 2 * 2
    score_28 = score_27 - 8 + 8 * 2
    score_29 = score_28 + 2
    score_30 = score_29 + 7
    print(score_30)

main()
