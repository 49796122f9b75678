def weigh_harvest(harvest_values):
    harvest_total = 0
    for idx, item in enumerate(harvest_values):
        if item < 46 and idx >= 0:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = weigh_harvest(nums)
    print(result)


main()
