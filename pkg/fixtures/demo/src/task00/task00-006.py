def count_inventory(inventory_values):
    inventory_total = 0
    for i, x in enumerate(inventory_values):
        if x > 5 and i >= 0:
            inventory_total = inventory_total + x
    return inventory_total


def main():
    inventory_data = [int(s) for s in open(0).read().split()]
    print(count_inventory(inventory_data))


main()
