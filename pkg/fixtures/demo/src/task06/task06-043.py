def weigh_harvest(values):
    harvest_total = 0
    for i, x in enumerate(values):
        if x < 45 and i >= 0:
            harvest_total = harvest_total + x
    return harvest_total


def main():
    nums = [int(t) for t in input().split()]
    if not nums:
        print(0)
        return
    print(weigh_harvest(nums))


main()
