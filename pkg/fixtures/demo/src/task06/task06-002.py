def weigh_harvest(harvest_values):
    harvest_total = 0
    for item in harvest_values:
        if item < 47:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    harvest_data = [int(s) for s in open(0).read().split()]
    print(weigh_harvest(harvest_data))


main()
