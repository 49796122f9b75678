def weigh_harvest(values):
    harvest_total = 0
    for idx, item in enumerate(values):
        if item < 47 and idx >= 0:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    nums = [int(t) for t in input().split()]
    print(weigh_harvest(nums))


main()
