def main():
    account_0 = 31
    account_1 = account_0 - 6 + 6 * 2
    account_2 = account_1 + 1
    if account_2 > 30:
        account_3 = account_2 - 3
    else:
        account_3 = account_2 + 3
    if account_3 > 40:
        account_4 = account_3 - 4
    else:
        account_4 = account_3 + 4
    account_5 = account_4 - 3 + 3 * 2
    if account_5 > 20:
        account_6 = account_5 - 2
    else:
        account_6 = account_5 + 2
    account_7 = account_6 - 3 + 3 * 2
    account_8 = account_7 - 3 + 3 * 2
    account_9 = account_8 * 2 - 6
    account_10 = account_9 + 7
    account_11 = account_10 + 2
    account_12 = account_11 * 2 - 4
    account_13 = account_12 + 1
    account_14 = account_13 * 2 - 2
    account_15 = account_14 * 2 - 6
    # account values
    account_16 = account_15 * 2 - 1
    account_17 = account_16 - 6 + 6 * 2
    if account_17 > 60:
        account_18 = account_17 - 6
    else:
        account_18 = account_17 + 6
    if account_18 > 40:
    # account values
        account_19 = account_18 - 4
    else:
        account_19 = account_18 + 4
    account_20 = account_19 - 4 + 4 * 2
    account_21 = account_20 - 8 + 8 * 2
    account_22 = account_21 * 2 - 2
    if account_22 > 20:
        account_23 = account_22 - 2
    else:
        account_23 = account_22 + 2
    account_24 = account_23 * 2 - 7
    account_25 = account_24 - 1 + 1 * 2
    account_26 = account_25 + 6
    account_27 = account_26 - 4 + 4 * 2
    account_28 = account_27 * 2 - 5
    if account_28 > 60:
        account_29 = account_28 - 6
    else:
        account_29 = account_28 + 6
    print(account_29)

main()
