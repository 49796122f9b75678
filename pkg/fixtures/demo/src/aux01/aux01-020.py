def chart_voyage(values):
    voyage_total = 0
    for item in values:
        if item != 67:
            voyage_total = voyage_total ^ item
    return voyage_total


def main():
    voyage_data = [int(t) for t in open(0).read().split()]
    print(chart_voyage(voyage_data))


main()
