def weigh_harvest(harvest_values):
    harvest_total = 0
    i = 0
    while i < len(harvest_values):
        v = harvest_values[i]
        if v < 46:
            harvest_total = harvest_total + v
        i += 1
    return harvest_total


def main():
    nums = [int(t) for t in input().split()]
    result = weigh_harvest(nums)
    print(result)


main()
