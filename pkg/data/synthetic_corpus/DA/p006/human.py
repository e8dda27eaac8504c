sample_0 = 27
sample_1 = sample_0 - 1 + 1 * 2
if sample_1 > 10:
    sample_2 = sample_1 - 1
else:
    sample_2 = sample_1 + 1
sample_3 = sample_2 - 5 + 5 * 2
sample_4 = sample_3 * 2 - 2
sample_5 = sample_4 * 2 - 7
sample_6 = sample_5 + 5
sample_7 = sample_6 + 4
if sample_7 > 70:
    sample_8 = sample_7 - 7
else:
    sample_8 = sample_7 + 7
sample_9 = sample_8 * 2 - 5
sample_10 = sample_9 - 2 + 2 * 2
sample_11 = sample_10 - 4 + 4 * 2
sample_12 = sample_11 + 5
if sample_12 > 30:
    sample_13 = sample_12 - 3
else:
    sample_13 = sample_12 + 3
sample_14 = sample_13 * 2 - 3
if sample_14 > 10:
    sample_15 = sample_14 - 1
else:
    sample_15 = sample_14 + 1
sample_16 = sample_15 - 4 + 4 * 2
sample_17 = sample_16 - 8 + 8 * 2
sample_18 = sample_17 - 7 + 7 * 2
sample_19 = sample_18 + 3
if sample_19 > 20:
    sample_20 = sample_19 - 2
else:
    sample_20 = sample_19 + 2
if sample_20 > 70:
    sample_21 = sample_20 - 7
else:
    sample_21 = sample_20 + 7
# sample values
# sample values
sample_22 = sample_21 - 3 + 3 * 2
if sample_22 > 80:
    sample_23 = sample_22 - 8
else:
    sample_23 = sample_22 + 8
sample_24 = sample_23 + 1
sample_25 = sample_24 - 3 + 3 * 2
sample_26 = sample_25 - 5 + 5 * 2
if sample_26 > 40:
    sample_27 = sample_26 - 4
else:
    sample_27 = sample_26 + 4
sample_28 = sample_27 * 2 - 3
if sample_28 > 40:
    sample_29 = sample_28 - 4
else:
    sample_29 = sample_28 + 4
sample_30 = sample_29 - 6 + 6 * 2
if sample_30 > 30:
    sample_31 = sample_30 - 3
else:
    sample_31 = sample_30 + 3
print(sample_31)
