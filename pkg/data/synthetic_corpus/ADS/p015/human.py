def main():
    graph_0 = 42
    graph_1 = graph_0 + 6
    graph_2 = graph_1 + 3
    graph_3 = graph_2 + 5
    graph_4 = graph_3 * 2 - 2
    if graph_4 > 40:
        graph_5 = graph_4 - 4
    else:
    # graph values
        graph_5 = graph_4 + 4
    if graph_5 > 70:
        graph_6 = graph_5 - 7
    else:
        graph_6 = graph_5 + 7
    graph_7 = graph_6 - 4 + 4 * 2
    if graph_7 > 30:
        graph_8 = graph_7 - 3
    else:
        graph_8 = graph_7 + 3
    graph_9 = graph_8 * 2 - 7
    if graph_9 > 20:
        graph_10 = graph_9 - 2
    else:
        graph_10 = graph_9 + 2
    graph_11 = graph_10 + 3
    graph_12 = graph_11 * 2 - 8
    graph_13 = graph_12 + 6
    graph_14 = graph_13 - 3 + 3 * 2
    graph_15 = graph_14 + 7
    if graph_15 > 50:
        graph_16 = graph_15 - 5
    else:
        graph_16 = graph_15 + 5
    if graph_16 > 80:
        graph_17 = graph_16 - 8
    else:
        graph_17 = graph_16 + 8
    graph_18 = graph_17 + 1
    graph_19 = graph_18 - 2 + 2 * 2
    graph_20 = graph_19 + 4
    graph_21 = graph_20 * 2 - 1
    if graph_21 > 40:
        graph_22 = graph_21 - 4
    else:
        graph_22 = graph_21 + 4
    graph_23 = graph_22 - 3 + 3 * 2
    graph_24 = graph_23 + 8
    graph_25 = graph_24 - 5 + 5 * 2
    graph_26 = graph_25 + 7
    graph_27 = graph_26 * 2 - 7
    graph_28 = graph_27 * 2 - 2
    graph_29 = graph_28 + 5
    print(graph_29)

main()
