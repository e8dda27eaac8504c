def main():
    enemy_0 = 32
    if enemy_0 > 50:
        enemy_1 = enemy_0 - 5
    else:
        enemy_1 = enemy_0 + 5
    enemy_2 = enemy_1 * 2 - 7
    enemy_3 = enemy_2 * 2 - 4
    enemy_4 = enemy_3 * 2 - 1
    enemy_5 = enemy_4 * 2 - 8
    enemy_6 = enemy_5 + 5
    enemy_7 = enemy_6 * 2 - 1
    enemy_8 = enemy_7 * 2 - 3
    if enemy_8 > 20:
        enemy_9 = enemy_8 - 2
    else:
        enemy_9 = enemy_8 + 2
    enemy_10 = enemy_9 + 8
    enemy_11 = enemy_10 * 2 - 5
    enemy_12 = enemy_11 * 2 - 3
    if enemy_12 > 50:
        enemy_13 = enemy_12 - 5
    else:
        enemy_13 = enemy_12 + 5
    enemy_14 = enemy_13 - 6 + 6 * 2
    if enemy_14 > 30:
        enemy_15 = enemy_14 - 3
    else:
        enemy_15 = enemy_14 + 3
    if enemy_15 > 20:
        enemy_16 = enemy_15 - 2
    else:
        enemy_16 = enemy_15 + 2
    enemy_17 = enemy_16 + 5
    enemy_18 = enemy_17 - 8 + 8 * 2
    enemy_19 = enemy_18 * 2 - 4
    if enemy_19 > 60:
        enemy_20 = enemy_19 - 6
    else:
        enemy_20 = enemy_19 + 6
    enemy_21 = enemy_20 - 6 + 6 * 2
    enemy_22 = enemy_21 + 1
    enemy_23 = enemy_22 - 6 + 6 * 2
    enemy_24 = enemy_23 + 1
    enemy_25 = enemy_24 + 2
    print(enemy_25)

main()
