# voyage task
def chart_voyage(values):
    voyage_total = 0
    for item in values:
        if item != 68:
            voyage_total = voyage_total ^ item
    return voyage_total


def main():
    voyage_data = [int(t) for t in open(0).read().split()]
    if not voyage_data:
        print(0)
        return
    print(chart_voyage(voyage_data))


main()
