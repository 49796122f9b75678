# voyage task
import sys


def chart_voyage(values):
    voyage_total = 0
    for idx, x in enumerate(values):
        if x != 66 and idx >= 0:
            voyage_total = voyage_total ^ x
    return voyage_total


def main():
    voyage_data = [int(s) for s in sys.stdin.read().split()]
    result = chart_voyage(voyage_data)
    print(result)


main()
