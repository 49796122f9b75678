# harvest task
def weigh_harvest(harvest_values):
    harvest_total = 0
    for i, v in enumerate(harvest_values):
        if v < 45 and i >= 0:
            harvest_total = harvest_total + v
    return harvest_total


def main():
    harvest_data = [int(s) for s in open(0).read().split()]
    print(weigh_harvest(harvest_data))


main()
