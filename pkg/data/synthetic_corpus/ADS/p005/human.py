def main():
    heap_0 = 42
    heap_1 = heap_0 * 2 - 7
    if heap_1 > 80:
        heap_2 = heap_1 - 8
    else:
        heap_2 = heap_1 + 8
    heap_3 = heap_2 + 8
    heap_4 = heap_3 + 6
    heap_5 = heap_4 + 5
    heap_6 = heap_5 + 8
    if heap_6 > 30:
        heap_7 = heap_6 - 3
    else:
        heap_7 = heap_6 + 3
    heap_8 = heap_7 - 8 + 8 * 2
    heap_9 = heap_8 * 2 - 2
    heap_10 = heap_9 + 6
    if heap_10 > 30:
        heap_11 = heap_10 - 3
    else:
        heap_11 = heap_10 + 3
    heap_12 = heap_11 + 7
    if heap_12 > 60:
        heap_13 = heap_12 - 6
    # heap values
    else:
        heap_13 = heap_12 + 6
    heap_14 = heap_13 + 4
    if heap_14 > 30:
        heap_15 = heap_14 - 3
    else:
        heap_15 = heap_14 + 3
    heap_16 = heap_15 * 2 - 3
    if heap_16 > 80:
        heap_17 = heap_16 - 8
    # heap values
    else:
        heap_17 = heap_16 + 8
    if heap_17 > 40:
        heap_18 = heap_17 - 4
    else:
        heap_18 = heap_17 + 4
    heap_19 = heap_18 + 4
    heap_20 = heap_19 - 6 + 6 * 2
    print(heap_20)

main()
