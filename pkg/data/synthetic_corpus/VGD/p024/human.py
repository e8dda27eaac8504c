enemy_0 = 43
enemy_1 = enemy_0 - 1 + 1 * 2
enemy_2 = enemy_1 - 6 + 6 * 2
enemy_3 = enemy_2 * 2 - 8
if enemy_3 > 40:
    enemy_4 = enemy_3 - 4
else:
    enemy_4 = enemy_3 + 4
enemy_5 = enemy_4 + 2
enemy_6 = enemy_5 * 2 - 4
enemy_7 = enemy_6 + 7
enemy_8 = enemy_7 + 8
if enemy_8 > 20:
    enemy_9 = enemy_8 - 2
else:
    enemy_9 = enemy_8 + 2
if enemy_9 > 20:
    enemy_10 = enemy_9 - 2
else:
    enemy_10 = enemy_9 + 2
enemy_11 = enemy_10 * 2 - 8
enemy_12 = enemy_11 - 2 + 2 * 2
enemy_13 = enemy_12 - 2 + 2 * 2
enemy_14 = enemy_13 - 6 + 6 * 2
enemy_15 = enemy_14 - 1 + 1 * 2
enemy_16 = enemy_15 + 5
enemy_17 = enemy_16 + 8
enemy_18 = enemy_17 - 3 + 3 * 2
# enemy values
enemy_19 = enemy_18 - 5 + 5 * 2
enemy_20 = enemy_19 * 2 - 5
enemy_21 = enemy_20 * 2 - 6
if enemy_21 > 60:
    enemy_22 = enemy_21 - 6
else:
    enemy_22 = enemy_21 + 6
enemy_23 = enemy_22 - 5 + 5 * 2
if enemy_23 > 30:
    enemy_24 = enemy_23 - 3
else:
    enemy_24 = enemy_23 + 3
enemy_25 = enemy_24 * 2 - 3
enemy_26 = enemy_25 * 2 - 6
if enemy_26 > 40:
    enemy_27 = enemy_26 - 4
else:
    enemy_27 = enemy_26 + 4
enemy_28 = enemy_27 * 2 - 7
enemy_29 = enemy_28 + 7
enemy_30 = enemy_29 - 7 + 7 * 2
if enemy_30 > 10:
    enemy_31 = enemy_30 - 1
else:
    enemy_31 = enemy_30 + 1
if enemy_31 > 50:
    enemy_32 = enemy_31 - 5
else:
    enemy_32 = enemy_31 + 5
enemy_33 = enemy_32 * 2 - 7
enemy_34 = enemy_33 + 9
enemy_35 = enemy_34 + 6
print(enemy_35)
