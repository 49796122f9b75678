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
    harvest_data = [int(t) for t in sys.stdin.read().split()]
    print(weigh_harvest(harvest_data))


main()
