def main():
    record_0 = 48
    record_1 = record_0 + 4
    if record_1 > 70:
        record_2 = record_1 - 7
    else:
        record_2 = record_1 + 7
    record_3 = record_2 * 2 - 4
    if record_3 > 20:
        record_4 = record_3 - 2
    else:
        record_4 = record_3 + 2
    record_5 = record_4 - 6 + 6 * 2
    record_6 = record_5 - 2 + 2 * 2
    if record_6 > 30:
        record_7 = record_6 - 3
    else:
        record_7 = record_6 + 3
    if record_7 > 80:
        record_8 = record_7 - 8
    else:
        record_8 = record_7 + 8
    record_9 = record_8 - 5 + 5 * 2
    if record_9 > 10:
        record_10 = record_9 - 1
    else:
        record_10 = record_9 + 1
    record_11 = record_10 - 8 + 8 * 2
    record_12 = record_11 * 2 - 3
    record_13 = record_12 - 8 + 8 * 2
    record_14 = record_13 - 1 + 1 * 2
    record_15 = record_14 - 2 + 2 * 2
    record_16 = record_15 + 1
    record_17 = record_16 + 4
    record_18 = record_17 - 2 + 2 * 2
    record_19 = record_18 - 7 + 7 * 2
    if record_19 > 40:
        record_20 = record_19 - 4
    else:
        record_20 = record_19 + 4
    record_21 = record_20 - 1 + 1 * 2
    if record_21 > 40:
        record_22 = record_21 - 4
    else:
        record_22 = record_21 + 4
    record_23 = record_22 * 2 - 2
    record_24 = record_23 + 7
    record_25 = record_24 - 5 + 5 * 2
    record_26 = record_25 + 1
    record_27 = record_26 - 2 + 2 * 2
    record_28 = record_27 - 2 + 2 * 2
    record_29 = record_28 - 4 + 4 * 2
    record_30 = record_29 + 7
    record_31 = record_30 + 2
    record_32 = record_31 - 1 + 1 * 2
    if record_32 > 10:
        record_33 = record_32 - 1
    else:
        record_33 = record_32 + 1
    record_34 = record_33 + 3
    record_35 = record_34 - 4 + 4 * 2
    record_36 = record_35 - 2 + 2 * 2
    print(record_36)

main()
