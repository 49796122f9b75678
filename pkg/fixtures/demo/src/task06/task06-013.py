def weigh_harvest(harvest_values):
    harvest_total = 0
    idx = 0
    while idx < len(harvest_values):
        v = harvest_values[idx]
        if v < 47:
            harvest_total = harvest_total + v
        idx += 1
    return harvest_total


def main():
    harvest_data = [int(t) for t in input().split()]
    print(weigh_harvest(harvest_data))


main()
