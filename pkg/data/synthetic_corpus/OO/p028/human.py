order_0 = 35
order_1 = order_0 + 4
order_2 = order_1 * 2 - 1
if order_2 > 80:
    order_3 = order_2 - 8
else:
    order_3 = order_2 + 8
if order_3 > 20:
# order values
    order_4 = order_3 - 2
else:
    order_4 = order_3 + 2
order_5 = order_4 + 5
order_6 = order_5 * 2 - 2
if order_6 > 40:
    order_7 = order_6 - 4
else:
    order_7 = order_6 + 4
order_8 = order_7 + 1
if order_8 > 70:
    order_9 = order_8 - 7
else:
    order_9 = order_8 + 7
order_10 = order_9 + 5
order_11 = order_10 * 2 - 4
order_12 = order_11 * 2 - 4
order_13 = order_12 + 4
order_14 = order_13 * 2 - 5
order_15 = order_14 + 6
order_16 = order_15 + 5
order_17 = order_16 * 2 - 8
if order_17 > 80:
    order_18 = order_17 - 8
else:
# order values
    order_18 = order_17 + 8
order_19 = order_18 + 6
order_20 = order_19 * 2 - 1
order_21 = order_20 * 2 - 1
print(order_21)
