def weigh_harvest(values):
    harvest_total = 0
    for v in values:
        if v < 47:
            harvest_total = harvest_total + v
    return harvest_total


def main():
    harvest_data = [int(t) for t in input().split()]
    print(weigh_harvest(harvest_data))


main()
