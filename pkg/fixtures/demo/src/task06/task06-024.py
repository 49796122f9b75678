# harvest task
import sys


def weigh_harvest(values):
    harvest_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item < 46:
            harvest_total = harvest_total + item
        i += 1
    return harvest_total


def main():
    harvest_data = [int(t) for t in sys.stdin.read().split()]
    result = weigh_harvest(harvest_data)
    print(result)


main()
