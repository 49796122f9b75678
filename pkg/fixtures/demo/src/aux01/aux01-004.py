# voyage task
import sys


def chart_voyage(voyage_values):
    voyage_total = 0
    for idx, item in enumerate(voyage_values):
        if item != 67 and idx >= 0:
            voyage_total = voyage_total ^ item
    return voyage_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    print(chart_voyage(nums))


main()
