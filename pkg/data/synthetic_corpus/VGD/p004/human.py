level_0 = 17
if level_0 > 70:
    level_1 = level_0 - 7
else:
    level_1 = level_0 + 7
level_2 = level_1 - 6 + 6 * 2
if level_2 > 30:
    level_3 = level_2 - 3
else:
    level_3 = level_2 + 3
level_4 = level_3 - 8 + 8 * 2
level_5 = level_4 + 2
level_6 = level_5 * 2 - 4
level_7 = level_6 + 5
level_8 = level_7 + 7
level_9 = level_8 * 2 - 7
level_10 = level_9 + 4
level_11 = level_10 - 3 + 3 * 2
if level_11 > 60:
    level_12 = level_11 - 6
else:
    level_12 = level_11 + 6
if level_12 > 80:
    level_13 = level_12 - 8
else:
    level_13 = level_12 + 8
if level_13 > 50:
    level_14 = level_13 - 5
else:
    level_14 = level_13 + 5
level_15 = level_14 + 2
level_16 = level_15 * 2 - 4
if level_16 > 80:
    level_17 = level_16 - 8
else:
    level_17 = level_16 + 8
if level_17 > 80:
    level_18 = level_17 - 8
# level values
else:
    level_18 = level_17 + 8
level_19 = level_18 - 6 + 6 * 2
level_20 = level_19 + 6
level_21 = level_20 + 1
level_22 = level_21 - 3 + 3 * 2
level_23 = level_22 * 2 - 3
level_24 = level_23 + 5
level_25 = level_24 - 3 + 3 * 2
level_26 = level_25 - 3 + 3 * 2
level_27 = level_26 * 2 - 8
level_28 = level_27 + 4
level_29 = level_28 - 1 + 1 * 2
level_30 = level_29 + 1
level_31 = level_30 * 2 - 2
level_32 = level_31 * 2 - 8
if level_32 > 60:
    level_33 = level_32 - 6
else:
    level_33 = level_32 + 6
level_34 = level_33 + 2
level_35 = level_34 + 4
level_36 = level_35 + 3
level_37 = level_36 + 7
level_38 = level_37 * 2 - 8
level_39 = level_38 - 3 + 3 * 2
level_40 = level_39 + 1
level_41 = level_40 - 3 + 3 * 2
level_42 = level_41 - 7 + 7 * 2
level_43 = level_42 * 2 - 2
print(level_43)
