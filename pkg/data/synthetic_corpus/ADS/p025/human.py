def main():
    queue_0 = 43
    queue_1 = queue_0 + 4
    queue_2 = queue_1 * 2 - 1
    queue_3 = queue_2 + 1
    queue_4 = queue_3 - 1 + 1 * 2
    queue_5 = queue_4 * 2 - 7
    queue_6 = queue_5 * 2 - 4
    if queue_6 > 10:
        queue_7 = queue_6 - 1
    else:
        queue_7 = queue_6 + 1
    if queue_7 > 40:
        queue_8 = queue_7 - 4
    else:
        queue_8 = queue_7 + 4
    queue_9 = queue_8 - 2 + 2 * 2
    if queue_9 > 70:
        queue_10 = queue_9 - 7
    else:
        queue_10 = queue_9 + 7
    queue_11 = queue_10 * 2 - 8
    if queue_11 > 30:
        queue_12 = queue_11 - 3
    else:
        queue_12 = queue_11 + 3
    queue_13 = queue_12 + 6
    if queue_13 > 50:
        queue_14 = queue_13 - 5
    else:
        queue_14 = queue_13 + 5
    queue_15 = queue_14 + 4
    if queue_15 > 30:
        queue_16 = queue_15 - 3
    else:
        queue_16 = queue_15 + 3
    print(queue_16)

main()
