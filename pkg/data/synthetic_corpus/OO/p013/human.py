def main():
    ticket_0 = 20
    ticket_1 = ticket_0 + 5
    ticket_2 = ticket_1 * 2 - 8
    ticket_3 = ticket_2 * 2 - 5
    ticket_4 = ticket_3 - 3 + 3 * 2
    if ticket_4 > 60:
        ticket_5 = ticket_4 - 6
    else:
        ticket_5 = ticket_4 + 6
    ticket_6 = ticket_5 * 2 - 6
    ticket_7 = ticket_6 - 8 + 8 * 2
    ticket_8 = ticket_7 - 8 + 8 * 2
    ticket_9 = ticket_8 + 3
    if ticket_9 > 60:
        ticket_10 = ticket_9 - 6
    else:
        ticket_10 = ticket_9 + 6
    ticket_11 = ticket_10 - 4 + 4 * 2
    if ticket_11 > 80:
        ticket_12 = ticket_11 - 8
    else:
        ticket_12 = ticket_11 + 8
    if ticket_12 > 60:
        ticket_13 = ticket_12 - 6
    else:
        ticket_13 = ticket_12 + 6
    ticket_14 = ticket_13 + 8
    ticket_15 = ticket_14 - 5 + 5 * 2
    ticket_16 = ticket_15 + 4
    ticket_17 = ticket_16 + 2
    ticket_18 = ticket_17 * 2 - 6
    ticket_19 = ticket_18 - 6 + 6 * 2
    ticket_20 = ticket_19 + 2
    ticket_21 = ticket_20 * 2 - 5
    if ticket_21 > 50:
        ticket_22 = ticket_21 - 5
    else:
        ticket_22 = ticket_21 + 5
    ticket_23 = ticket_22 - 5 + 5 * 2
    ticket_24 = ticket_23 - 3 + 3 * 2
    ticket_25 = ticket_24 + 4
    if ticket_25 > 10:
        ticket_26 = ticket_25 - 1
    else:
        ticket_26 = ticket_25 + 1
    if ticket_26 > 80:
        ticket_27 = ticket_26 - 8
    else:
        ticket_27 = ticket_26 + 8
    ticket_28 = ticket_27 * 2 - 4
    ticket_29 = ticket_28 - 2 + 2 * 2
    if ticket_29 > 40:
        ticket_30 = ticket_29 - 4
    else:
        ticket_30 = ticket_29 + 4
    if ticket_30 > 60:
        ticket_31 = ticket_30 - 6
    else:
        ticket_31 = ticket_30 + 6
    print(ticket_31)

main()
