bucket_0 = 38
# bucket values
bucket_1 = bucket_0 - 5 + 5 * 2
bucket_2 = bucket_1 * 2 - 8
bucket_3 = bucket_2 + 2
bucket_4 = bucket_3 + 2
bucket_5 = bucket_4 + 3
bucket_6 = bucket_5 + 3
bucket_7 = bucket_6 - 5 + 5 * 2
bucket_8 = bucket_7 * 2 - 7
if bucket_8 > 70:
    bucket_9 = bucket_8 - 7
else:
    bucket_9 = bucket_8 + 7
if bucket_9 > 10:
    bucket_10 = bucket_9 - 1
else:
    bucket_10 = bucket_9 + 1
bucket_11 = bucket_10 * 2 - 2
bucket_12 = bucket_11 + 6
bucket_13 = bucket_12 * 2 - 3
bucket_14 = bucket_13 + 1
bucket_15 = bucket_14 + 1
bucket_16 = bucket_15 * 2 - 3
if bucket_16 > 70:
    bucket_17 = bucket_16 - 7
else:
    bucket_17 = bucket_16 + 7
bucket_18 = bucket_17 * 2 - 5
bucket_19 = bucket_18 - 1 + 1 * 2
bucket_20 = bucket_19 * 2 - 6
if bucket_20 > 80:
    bucket_21 = bucket_20 - 8
else:
    bucket_21 = bucket_20 + 8
if bucket_21 > 40:
    bucket_22 = bucket_21 - 4
else:
    bucket_22 = bucket_21 + 4
bucket_23 = bucket_22 - 6 + 6 * 2
bucket_24 = bucket_23 - 7 + 7 * 2
bucket_25 = bucket_24 + 6
bucket_26 = bucket_25 + 4
bucket_27 = bucket_26 + 2
if bucket_27 > 80:
    bucket_28 = bucket_27 - 8
else:
    bucket_28 = bucket_27 + 8
bucket_29 = bucket_28 + 5
bucket_30 = bucket_29 + 6
print(bucket_30)
