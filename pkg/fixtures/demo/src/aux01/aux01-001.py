# voyage task
import sys


def chart_voyage(voyage_values):
    voyage_total = 0
    for v in voyage_values:
        if v != 68:
            voyage_total = voyage_total ^ v
    return voyage_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    print(chart_voyage(nums))


main()
