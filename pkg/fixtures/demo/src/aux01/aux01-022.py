def chart_voyage(voyage_values):
    voyage_total = 0
    for idx, item in enumerate(voyage_values):
        if item != 68 and idx >= 0:
            voyage_total = voyage_total ^ item
    return voyage_total


def main():
    voyage_data = [int(s) for s in input().split()]
    if not voyage_data:
        print(0)
        return
    result = chart_voyage(voyage_data)
    print(result)


main()
