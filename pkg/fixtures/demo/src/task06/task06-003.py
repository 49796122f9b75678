import sys


def weigh_harvest(harvest_values):
    harvest_total = 0
    for x in harvest_values:
        if x < 47:
            harvest_total = harvest_total + x
    return harvest_total


def main():
    harvest_data = [int(s) for s in sys.stdin.read().split()]
    if not harvest_data:
        print(0)
        return
    result = weigh_harvest(harvest_data)
    print(result)


main()
