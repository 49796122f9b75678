def weigh_harvest(values):
    harvest_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item < 46:
            harvest_total = harvest_total + item
        i += 1
    return harvest_total


def main():
    nums = [int(s) for s in input().split()]
    result = weigh_harvest(nums)
    print(result)


main()
