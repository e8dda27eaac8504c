def main():
    score_0 = 8
    if score_0 > 10:
        score_1 = score_0 - 1
    # score values
    else:
        score_1 = score_0 + 1
    score_2 = score_1 * 2 - 1
    score_3 = score_2 * 2 - 6
    score_4 = score_3 + 1
    score_5 = score_4 * 2 - 2
    score_6 = score_5 * 2 - 5
    score_7 = score_6 + 4
    score_8 = score_7 * 2 - 5
    score_9 = score_8 + 7
    if score_9 > 10:
        score_10 = score_9 - 1
    else:
        score_10 = score_9 + 1
    score_11 = score_10 + 1
    score_12 = score_11 * 2 - 5
    score_13 = score_12 - 5 + 5 * 2
    score_14 = score_13 - 7 + 7 * 2
    score_15 = score_14 * 2 - 6
    if score_15 > 70:
        score_16 = score_15 - 7
    # score values
    else:
        score_16 = score_15 + 7
    if score_16 > 70:
        score_17 = score_16 - 7
    else:
        score_17 = score_16 + 7
    score_18 = score_17 - 3 + 3 * 2
    print(score_18)

main()
