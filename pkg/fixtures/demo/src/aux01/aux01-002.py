import sys


def chart_voyage(values):
    voyage_total = 0
    for i, x in enumerate(values):
        if x != 67 and i >= 0:
            voyage_total = voyage_total ^ x
    return voyage_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = chart_voyage(nums)
    print(result)


main()
