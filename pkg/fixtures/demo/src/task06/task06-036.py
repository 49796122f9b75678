import sys


def weigh_harvest(values):
    harvest_total = 0
    for x in values:
        if x < 46:
            harvest_total = harvest_total + x
    return harvest_total


def main():
    harvest_data = [int(t) for t in sys.stdin.read().split()]
    result = weigh_harvest(harvest_data)
    print(result)


main()
