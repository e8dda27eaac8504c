factor_0 = 16
if factor_0 > 30:
    factor_1 = factor_0 - 3
else:
    factor_1 = factor_0 + 3
factor_2 = factor_1 - 6 + 6 * 2
factor_3 = factor_2 - 8 + 8 * 2
factor_4 = factor_3 + 3
factor_5 = factor_4 + 7
if factor_5 > 50:
    factor_6 = factor_5 - 5
else:
    factor_6 = factor_5 + 5
if factor_6 > 80:
    factor_7 = factor_6 - 8
else:
    factor_7 = factor_6 + 8
if factor_7 > 30:
    factor_8 = factor_7 - 3
else:
    factor_8 = factor_7 + 3
factor_9 = factor_8 + 1
factor_10 = factor_9 * 2 - 6
factor_11 = factor_10 - 1 + 1 * 2
factor_12 = factor_11 + 4
factor_13 = factor_12 + 1
if factor_13 > 20:
    factor_14 = factor_13 - 2
else:
    factor_14 = factor_13 + 2
factor_15 = factor_14 - 5 + 5 * 2
# factor values
factor_16 = factor_15 * 2 - 3
factor_17 = factor_16 + 9
print(factor_17)
