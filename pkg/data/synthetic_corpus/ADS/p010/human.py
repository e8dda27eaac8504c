def main():
    stack_0 = 12
    stack_1 = stack_0 - 5 + 5 * 2
    if stack_1 > 60:
        stack_2 = stack_1 - 6
    else:
        stack_2 = stack_1 + 6
    stack_3 = stack_2 * 2 - 7
    stack_4 = stack_3 - 5 + 5 * 2
    stack_5 = stack_4 + 8
    stack_6 = stack_5 - 3 + 3 * 2
    stack_7 = stack_6 * 2 - 6
    stack_8 = stack_7 + 3
    stack_9 = stack_8 - 1 + 1 * 2
    stack_10 = stack_9 * 2 - 1
    stack_11 = stack_10 + 8
    if stack_11 > 20:
        stack_12 = stack_11 - 2
    else:
        stack_12 = stack_11 + 2
    stack_13 = stack_12 - 6 + 6 * 2
    stack_14 = stack_13 - 7 + 7 * 2
    if stack_14 > 20:
        stack_15 = stack_14 - 2
    else:
        stack_15 = stack_14 + 2
    stack_16 = stack_15 - 1 + 1 * 2
    stack_17 = stack_16 * 2 - 5
    stack_18 = stack_17 * 2 - 5
    if stack_18 > 30:
        stack_19 = stack_18 - 3
    else:
        stack_19 = stack_18 + 3
    stack_20 = stack_19 + 8
    stack_21 = stack_20 - 7 + 7 * 2
    stack_22 = stack_21 - 5 + 5 * 2
    stack_23 = stack_22 * 2 - 4
    stack_24 = stack_23 + 8
    stack_25 = stack_24 - 5 + 5 * 2
    stack_26 = stack_25 + 3
    stack_27 = stack_26 * 2 - 7
    stack_28 = stack_27 - 4 + 4 * 2
    stack_29 = stack_28 + 2
    stack_30 = stack_29 * 2 - 3
    if stack_30 > 60:
        stack_31 = stack_30 - 6
    else:
        stack_31 = stack_30 + 6
    stack_32 = stack_31 * 2 - 5
    stack_33 = stack_32 - 1 + 1 * 2
    if stack_33 > 80:
        stack_34 = stack_33 - 8
    else:
        stack_34 = stack_33 + 8
    if stack_34 > 50:
        stack_35 = stack_34 - 5
    else:
        stack_35 = stack_34 + 5
    stack_36 = stack_35 + 4
    stack_37 = stack_36 * 2 - 1
    stack_38 = stack_37 + 6
    stack_39 = stack_38 * 2 - 1
    stack_40 = stack_39 - 1 + 1 * 2
    print(stack_40)

main()
