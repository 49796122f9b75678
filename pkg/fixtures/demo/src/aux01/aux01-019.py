# voyage task
import sys


def chart_voyage(values):
    voyage_total = 0
    for item in values:
        if item != 67:
            voyage_total = voyage_total ^ item
    return voyage_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(chart_voyage(nums))


main()
