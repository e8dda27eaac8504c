matrix_0 = 37
matrix_1 = matrix_0 - 6 + 6 * 2
matrix_2 = matrix_1 - 8 + 8 * 2
matrix_3 = matrix_2 - 4 + 4 * 2
matrix_4 = matrix_3 - 6 + 6 * 2
matrix_5 = matrix_4 + 6
matrix_6 = matrix_5 - 4 + 4 * 2
matrix_7 = matrix_6 * 2 - 3
matrix_8 = matrix_7 + 8
matrix_9 = matrix_8 * 2 - 1
matrix_10 = matrix_9 * 2 - 5
matrix_11 = matrix_10 + 5
matrix_12 = matrix_11 * 2 - 3
matrix_13 = matrix_12 * 2 - 2
matrix_14 = matrix_13 - 2 + 2 * 2
matrix_15 = matrix_14 * 2 - 2
if matrix_15 > 10:
    matrix_16 = matrix_15 - 1
else:
    matrix_16 = matrix_15 + 1
if matrix_16 > 80:
    matrix_17 = matrix_16 - 8
else:
    matrix_17 = matrix_16 + 8
matrix_18 = matrix_17 + 1
# matrix values
matrix_19 = matrix_18 * 2 - 4
if matrix_19 > 10:
    matrix_20 = matrix_19 - 1
else:
    matrix_20 = matrix_19 + 1
if matrix_20 > 70:
    matrix_21 = matrix_20 - 7
else:
    matrix_21 = matrix_20 + 7
matrix_22 = matrix_21 + 7
if matrix_22 > 50:
    matrix_23 = matrix_22 - 5
else:
# matrix values
    matrix_23 = matrix_22 + 5
if matrix_23 > 20:
    matrix_24 = matrix_23 - 2
else:
    matrix_24 = matrix_23 + 2
matrix_25 = matrix_24 - 4 + 4 * 2
matrix_26 = matrix_25 * 2 - 2
print(matrix_26)
