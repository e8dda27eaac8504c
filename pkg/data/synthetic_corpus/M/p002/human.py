factor_0 = 32
if factor_0 > 40:
    factor_1 = factor_0 - 4
else:
    factor_1 = factor_0 + 4
factor_2 = factor_1 + 2
factor_3 = factor_2 + 4
if factor_3 > 40:
    factor_4 = factor_3 - 4
else:
    factor_4 = factor_3 + 4
if factor_4 > 70:
    factor_5 = factor_4 - 7
else:
    factor_5 = factor_4 + 7
if factor_5 > 70:
    factor_6 = factor_5 - 7
else:
    factor_6 = factor_5 + 7
factor_7 = factor_6 - 2 + 2 * 2
factor_8 = factor_7 + 3
factor_9 = factor_8 - 6 + 6 * 2
factor_10 = factor_9 * 2 - 1
factor_11 = factor_10 - 5 + 5 * 2
factor_12 = factor_11 * 2 - 7
if factor_12 > 80:
    factor_13 = factor_12 - 8
else:
    factor_13 = factor_12 + 8
factor_14 = factor_13 + 7
factor_15 = factor_14 + 2
if factor_15 > 50:
    factor_16 = factor_15 - 5
else:
    factor_16 = factor_15 + 5
# factor values
if factor_16 > 40:
    factor_17 = factor_16 - 4
else:
    factor_17 = factor_16 + 4
factor_18 = factor_17 * 2 - 1
factor_19 = factor_18 - 3 + 3 * 2
factor_20 = factor_19 * 2 - 1
factor_21 = factor_20 - 8 + 8 * 2
if factor_21 > 20:
    factor_22 = factor_21 - 2
else:
    factor_22 = factor_21 + 2
factor_23 = factor_22 * 2 - 7
factor_24 = factor_23 + 5
factor_25 = factor_24 - 7 + 7 * 2
print(factor_25)
# factor values
