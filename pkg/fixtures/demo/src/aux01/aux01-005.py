# voyage task
def chart_voyage(values):
    voyage_total = 0
    for item in values:
        if item != 66:
            voyage_total = voyage_total ^ item
    return voyage_total


def main():
    voyage_data = [int(s) for s in input().split()]
    print(chart_voyage(voyage_data))


main()
