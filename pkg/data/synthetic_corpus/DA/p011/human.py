def main():
    series_0 = 30
    series_1 = series_0 - 1 + 1 * 2
    series_2 = series_1 + 8
    series_3 = series_2 * 2 - 3
    series_4 = series_3 - 5 + 5 * 2
    series_5 = series_4 * 2 - 4
    series_6 = series_5 - 3 + 3 * 2
    series_7 = series_6 - 2 + 2 * 2
    series_8 = series_7 - 1 + 1 * 2
    series_9 = series_8 + 5
    if series_9 > 70:
        series_10 = series_9 - 7
    else:
        series_10 = series_9 + 7
    series_11 = series_10 - 8 + 8 * 2
    series_12 = series_11 - 3 + 3 * 2
    series_13 = series_12 - 2 + 2 * 2
    # series values
    series_14 = series_13 - 4 + 4 * 2
    if series_14 > 60:
        series_15 = series_14 - 6
    else:
        series_15 = series_14 + 6
    series_16 = series_15 + 2
    series_17 = series_16 + 4
    if series_17 > 60:
        series_18 = series_17 - 6
    else:
        series_18 = series_17 + 6
    series_19 = series_18 + 5
    series_20 = series_19 * 2 - 8
    series_21 = series_20 - 8 + 8 * 2
    print(series_21)

main()
