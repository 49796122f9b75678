def chart_voyage(voyage_values):
    voyage_total = 0
    for x in voyage_values:
        if x != 67:
            voyage_total = voyage_total ^ x
    return voyage_total


def main():
    voyage_data = [int(s) for s in open(0).read().split()]
    if not voyage_data:
        print(0)
        return
    result = chart_voyage(voyage_data)
    print(result)


main()
