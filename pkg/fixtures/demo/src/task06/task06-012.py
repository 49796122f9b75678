def weigh_harvest(values):
    harvest_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item < 45:
            harvest_total = harvest_total + item
        idx += 1
    return harvest_total


def main():
    harvest_data = [int(s) for s in input().split()]
    result = weigh_harvest(harvest_data)
    print(result)


main()
