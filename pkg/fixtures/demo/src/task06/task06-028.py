def weigh_harvest(harvest_values):
    harvest_total = 0
    i = 0
    while i < len(harvest_values):
        v = harvest_values[i]
        if v < 45:
            harvest_total = harvest_total + v
        i += 1
    return harvest_total


def main():
    harvest_data = [int(s) for s in open(0).read().split()]
    result = weigh_harvest(harvest_data)
    print(result)


main()
