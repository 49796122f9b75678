import sys


def chart_voyage(voyage_values):
    voyage_total = 0
    for v in voyage_values:
        if v != 66:
            voyage_total = voyage_total ^ v
    return voyage_total


def main():
    voyage_data = [int(t) for t in sys.stdin.read().split()]
    if not voyage_data:
        print(0)
        return
    print(chart_voyage(voyage_data))


main()
