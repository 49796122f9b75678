def weigh_harvest(values):
    harvest_total = 0
    idx = 0
    while idx < len(values):
        v = values[idx]
        if v < 45:
            harvest_total = harvest_total + v
        idx += 1
    return harvest_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(weigh_harvest(nums))


main()
