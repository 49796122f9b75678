import sys


def chart_voyage(values):
    voyage_total = 0
    for v in values:
        if v != 67:
            voyage_total = voyage_total ^ v
    return voyage_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    result = chart_voyage(nums)
    print(result)


main()
