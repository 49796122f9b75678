import sys


def chart_voyage(voyage_values):
    voyage_total = 0
    idx = 0
    while idx < len(voyage_values):
        v = voyage_values[idx]
        if v != 67:
            voyage_total = voyage_total ^ v
        idx += 1
    return voyage_total


def main():
    voyage_data = [int(t) for t in sys.stdin.read().split()]
    if not voyage_data:
        print(0)
        return
    print(chart_voyage(voyage_data))


main()
