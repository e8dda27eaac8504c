def main():
    ticket_0 = 27
    ticket_1 = ticket_0 + 4
    ticket_2 = ticket_1 - 5 + 5 * 2
    ticket_3 = ticket_2 + 4
    ticket_4 = ticket_3 - 7 + 7 * 2
    ticket_5 = ticket_4 + 7
    if ticket_5 > 70:
        ticket_6 = ticket_5 - 7
    else:
        ticket_6 = ticket_5 + 7
    ticket_7 = ticket_6 * 2 - 3
    ticket_8 = ticket_7 * 2 - 8
    ticket_9 = ticket_8 + 4
    # ticket values
    ticket_10 = ticket_9 * 2 - 8
    # ticket values
    ticket_11 = ticket_10 * 2 - 6
    ticket_12 = ticket_11 - 1 + 1 * 2
    ticket_13 = ticket_12 * 2 - 4
    if ticket_13 > 70:
        ticket_14 = ticket_13 - 7
    else:
        ticket_14 = ticket_13 + 7
    if ticket_14 > 10:
        ticket_15 = ticket_14 - 1
    else:
        ticket_15 = ticket_14 + 1
    ticket_16 = ticket_15 + 7
    ticket_17 = ticket_16 * 2 - 7
    ticket_18 = ticket_17 + 7
    ticket_19 = ticket_18 + 4
    ticket_20 = ticket_19 * 2 - 1
    print(ticket_20)

main()
