import sys


def weigh_harvest(values):
    harvest_total = 0
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x < 47:
            harvest_total = harvest_total + x
        idx += 1
    return harvest_total


def main():
    harvest_data = [int(s) for s in sys.stdin.read().split()]
    if not harvest_data:
        print(0)
        return
    print(weigh_harvest(harvest_data))


main()
