def chart_voyage(values):
    voyage_total = 0
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x != 66:
            voyage_total = voyage_total ^ x
        idx += 1
    return voyage_total


def main():
    voyage_data = [int(s) for s in input().split()]
    print(chart_voyage(voyage_data))


main()
