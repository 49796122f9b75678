def weigh_harvest(values):
    harvest_total = 0
    idx = 0
    while idx < len(values):
        v = values[idx]
        if v < 46:
            harvest_total = harvest_total + v
        idx += 1
    return harvest_total


def main():
    harvest_data = [int(t) for t in input().split()]
    print(weigh_harvest(harvest_data))


main()
