import sys


def weigh_harvest(values):
    harvest_total = 0
    for idx, v in enumerate(values):
        if v < 47 and idx >= 0:
            harvest_total = harvest_total + v
    return harvest_total


def main():
    harvest_data = [int(t) for t in sys.stdin.read().split()]
    print(weigh_harvest(harvest_data))


main()
