def main():
    stack_0 = 28
    stack_1 = stack_0 - 2 + 2 * 2
    if stack_1 > 40:
        stack_2 = stack_1 - 4
    else:
        stack_2 = stack_1 + 4
    stack_3 = stack_2 - 2 + 2 * 2
    stack_4 = stack_3 * 2 - 7
    stack_5 = stack_4 * 2 - 4
    if stack_5 > 30:
        stack_6 = stack_5 - 3
    else:
        stack_6 = stack_5 + 3
    stack_7 = stack_6 * 2 - 3
    stack_8 = stack_7 - 1 + 1 * 2
    stack_9 = stack_8 - 1 + 1 * 2
    stack_10 = stack_9 * 2 - 6
    stack_11 = stack_10 * 2 - 6
    stack_12 = stack_11 + 5
    stack_13 = stack_12 - 6 + 6 * 2
    if stack_13 > 40:
        stack_14 = stack_13 - 4
    else:
        stack_14 = stack_13 + 4
    stack_15 = stack_14 - 3 + 3 * 2
    stack_16 = stack_15 + 6
    stack_17 = stack_16 - 2 + 2 * 2
    stack_18 = stack_17 * 2 - 5
    stack_19 = stack_18 - 8 + 8 * 2
    stack_20 = stack_19 - 6 + 6 * 2
    if stack_20 > 40:
        stack_21 = stack_20 - 4
    else:
        stack_21 = stack_20 + 4
    if stack_21 > 30:
        stack_22 = stack_21 - 3
    else:
        stack_22 = stack_21 + 3
    stack_23 = stack_22 - 2 + 2 * 2
    stack_24 = stack_23 + 4
    stack_25 = stack_24 * 2 - 3
    stack_26 = stack_25 * 2 - 8
    stack_27 = stack_26 - 2 + 2 * 2
    stack_28 = stack_27 + 7
    print(stack_28)

main()
