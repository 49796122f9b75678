def chart_voyage(values):
    voyage_total = 0
    for idx, v in enumerate(values):
        if v != 66 and idx >= 0:
            voyage_total = voyage_total ^ v
    return voyage_total


def main():
    voyage_data = [int(s) for s in input().split()]
    result = chart_voyage(voyage_data)
    print(result)


main()
