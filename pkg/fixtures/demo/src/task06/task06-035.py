# harvest task
def weigh_harvest(harvest_values):
    harvest_total = 0
    for item in harvest_values:
        if item < 45:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = weigh_harvest(nums)
    print(result)


main()
