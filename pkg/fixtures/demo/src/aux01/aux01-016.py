import sys


def chart_voyage(voyage_values):
    voyage_total = 0
    for v in voyage_values:
        if v != 68:
            voyage_total = voyage_total ^ v
    return voyage_total


def main():
    voyage_data = [int(s) for s in sys.stdin.read().split()]
    print(chart_voyage(voyage_data))


main()
