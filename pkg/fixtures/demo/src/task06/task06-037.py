# harvest task
def weigh_harvest(values):
    harvest_total = 0
    for idx, x in enumerate(values):
        if x < 47 and idx >= 0:
            harvest_total = harvest_total + x
    return harvest_total


def main():
    nums = [int(s) for s in input().split()]
    result = weigh_harvest(nums)
    print(result)


main()
