def weigh_harvest(harvest_values):
    harvest_total = 0
    for idx, x in enumerate(harvest_values):
        if x < 45 and idx >= 0:
            harvest_total = harvest_total + x
    return harvest_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = weigh_harvest(nums)
    print(result)


main()
