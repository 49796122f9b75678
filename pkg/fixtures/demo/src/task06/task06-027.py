# harvest task
import sys


def weigh_harvest(harvest_values):
    harvest_total = 0
    for x in harvest_values:
        if x < 47:
            harvest_total = harvest_total + x
    return harvest_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(weigh_harvest(nums))


main()
