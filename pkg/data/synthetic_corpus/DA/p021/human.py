def main():
    sample_0 = 49
    sample_1 = sample_0 + 7
    sample_2 = sample_1 - 5 + 5 * 2
    if sample_2 > 30:
        sample_3 = sample_2 - 3
    else:
        sample_3 = sample_2 + 3
    sample_4 = sample_3 + 1
    sample_5 = sample_4 + 1
    sample_6 = sample_5 * 2 - 2
    sample_7 = sample_6 + 7
    sample_8 = sample_7 - 8 + 8 * 2
    # sample values
    if sample_8 > 30:
        sample_9 = sample_8 - 3
    else:
        sample_9 = sample_8 + 3
    sample_10 = sample_9 - 2 + 2 * 2
    sample_11 = sample_10 - 1 + 1 * 2
    if sample_11 > 70:
        sample_12 = sample_11 - 7
    else:
    # sample values
        sample_12 = sample_11 + 7
    sample_13 = sample_12 * 2 - 6
    sample_14 = sample_13 * 2 - 1
    sample_15 = sample_14 * 2 - 8
    sample_16 = sample_15 - 1 + 1 * 2
    sample_17 = sample_16 - 2 + 2 * 2
    if sample_17 > 80:
        sample_18 = sample_17 - 8
    else:
        sample_18 = sample_17 + 8
    if sample_18 > 70:
        sample_19 = sample_18 - 7
    else:
        sample_19 = sample_18 + 7
    print(sample_19)

main()
