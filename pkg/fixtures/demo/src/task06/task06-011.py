# harvest task
def weigh_harvest(harvest_values):
    harvest_total = 0
    for item in harvest_values:
        if item < 46:
            harvest_total = harvest_total + item
    return harvest_total


def main():
    harvest_data = [int(t) for t in input().split()]
    if not harvest_data:
        print(0)
        return
    print(weigh_harvest(harvest_data))


main()
