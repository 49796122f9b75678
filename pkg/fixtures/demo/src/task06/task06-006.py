# harvest task
def weigh_harvest(values):
    harvest_total = 0
    for item in values:
        if item < 46:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = weigh_harvest(nums)
    print(result)


main()
