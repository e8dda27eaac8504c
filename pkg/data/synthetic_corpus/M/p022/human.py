matrix_0 = 9
if matrix_0 > 20:
    matrix_1 = matrix_0 - 2
else:
    matrix_1 = matrix_0 + 2
matrix_2 = matrix_1 - 4 + 4 * 2
matrix_3 = matrix_2 * 2 - 4
matrix_4 = matrix_3 * 2 - 7
matrix_5 = matrix_4 - 5 + 5 * 2
matrix_6 = matrix_5 * 2 - 1
if matrix_6 > 60:
    matrix_7 = matrix_6 - 6
else:
    matrix_7 = matrix_6 + 6
matrix_8 = matrix_7 + 5
matrix_9 = matrix_8 * 2 - 7
matrix_10 = matrix_9 - 2 + 2 * 2
if matrix_10 > 10:
    matrix_11 = matrix_10 - 1
else:
    matrix_11 = matrix_10 + 1
matrix_12 = matrix_11 - 4 + 4 * 2
matrix_13 = matrix_12 * 2 - 1
if matrix_13 > 80:
    matrix_14 = matrix_13 - 8
else:
    matrix_14 = matrix_13 + 8
matrix_15 = matrix_14 * 2 - 6
if matrix_15 > 50:
    matrix_16 = matrix_15 - 5
else:
    matrix_16 = matrix_15 + 5
matrix_17 = matrix_16 - 2 + 2 * 2
matrix_18 = matrix_17 + 3
matrix_19 = matrix_18 - 5 + 5 * 2
matrix_20 = matrix_19 + 1
if matrix_20 > 50:
    matrix_21 = matrix_20 - 5
else:
    matrix_21 = matrix_20 + 5
matrix_22 = matrix_21 * 2 - 5
matrix_23 = matrix_22 * 2 - 8
matrix_24 = matrix_23 - 5 + 5 * 2
matrix_25 = matrix_24 + 7
matrix_26 = matrix_25 - 1 + 1 * 2
matrix_27 = matrix_26 + 1
print(matrix_27)
