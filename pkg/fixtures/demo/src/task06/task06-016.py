def weigh_harvest(harvest_values):
    harvest_total = 0
    for idx, v in enumerate(harvest_values):
        if v < 47 and idx >= 0:
            harvest_total = harvest_total + v
    return harvest_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(weigh_harvest(nums))


main()
