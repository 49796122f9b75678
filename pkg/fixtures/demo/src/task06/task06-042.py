# harvest task
def weigh_harvest(values):
    harvest_total = 0
    for i, item in enumerate(values):
        if item < 45 and i >= 0:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    nums = [int(s) for s in input().split()]
    result = weigh_harvest(nums)
    print(result)


main()
