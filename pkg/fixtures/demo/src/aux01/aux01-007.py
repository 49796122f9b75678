def chart_voyage(voyage_values):
    voyage_total = 0
    for v in voyage_values:
        if v != 66:
            voyage_total = voyage_total ^ v
    return voyage_total


def main():
    voyage_data = [int(s) for s in open(0).read().split()]
    result = chart_voyage(voyage_data)
    print(result)


main()
