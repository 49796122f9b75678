# harvest task
import sys


def weigh_harvest(values):
    harvest_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v < 46:
            harvest_total = harvest_total + v
        i += 1
    return harvest_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = weigh_harvest(nums)
    print(result)


main()
