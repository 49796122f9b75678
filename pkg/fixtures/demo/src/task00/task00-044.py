def count_inventory(values):
    inventory_total = 0
    for idx, v in enumerate(values):
        if v > 3 and idx >= 0:
            inventory_total = inventory_total + v
    return inventory_total


def main():
    inventory_data = [int(t) for t in open(0).read().split()]
    print(count_inventory(inventory_data))


main()
