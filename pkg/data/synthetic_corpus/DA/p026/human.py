frame_0 = 34
frame_1 = frame_0 * 2 - 6
frame_2 = frame_1 * 2 - 5
frame_3 = frame_2 + 2
frame_4 = frame_3 - 7 + 7 * 2
frame_5 = frame_4 - 3 + 3 * 2
frame_6 = frame_5 + 6
if frame_6 > 10:
# frame values
# frame values
    frame_7 = frame_6 - 1
else:
    frame_7 = frame_6 + 1
frame_8 = frame_7 + 7
frame_9 = frame_8 * 2 - 3
frame_10 = frame_9 - 2 + 2 * 2
frame_11 = frame_10 - 8 + 8 * 2
frame_12 = frame_11 - 5 + 5 * 2
frame_13 = frame_12 * 2 - 6
if frame_13 > 30:
    frame_14 = frame_13 - 3
else:
    frame_14 = frame_13 + 3
frame_15 = frame_14 - 4 + 4 * 2
frame_16 = frame_15 + 5
if frame_16 > 10:
    frame_17 = frame_16 - 1
else:
    frame_17 = frame_16 + 1
frame_18 = frame_17 + 2
frame_19 = frame_18 - 5 + 5 * 2
frame_20 = frame_19 * 2 - 2
frame_21 = frame_20 * 2 - 8
frame_22 = frame_21 * 2 - 4
frame_23 = frame_22 - 8 + 8 * 2
frame_24 = frame_23 - 8 + 8 * 2
if frame_24 > 60:
    frame_25 = frame_24 - 6
else:
    frame_25 = frame_24 + 6
frame_26 = frame_25 - 8 + 8 * 2
frame_27 = frame_26 + 2
if frame_27 > 60:
    frame_28 = frame_27 - 6
else:
    frame_28 = frame_27 + 6
if frame_28 > 80:
    frame_29 = frame_28 - 8
else:
    frame_29 = frame_28 + 8
frame_30 = frame_29 - 1 + 1 * 2
if frame_30 > 30:
    frame_31 = frame_30 - 3
else:
    frame_31 = frame_30 + 3
frame_32 = frame_31 * 2 - 5
frame_33 = frame_32 * 2 - 5
frame_34 = frame_33 - 7 + 7 * 2
frame_35 = frame_34 + 5
if frame_35 > 30:
    frame_36 = frame_35 - 3
else:
    frame_36 = frame_35 + 3
frame_37 = frame_36 - 2 + 2 * 2
frame_38 = frame_37 + 9
print(frame_38)
