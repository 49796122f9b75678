# harvest task
def weigh_harvest(harvest_values):
    harvest_total = 0
    idx = 0
    while idx < len(harvest_values):
        item = harvest_values[idx]
        if item < 46:
            harvest_total = harvest_total + item
        idx += 1
    return harvest_total


def main():
    harvest_data = [int(t) for t in open(0).read().split()]
    if not harvest_data:
        print(0)
        return
    print(weigh_harvest(harvest_data))


main()
