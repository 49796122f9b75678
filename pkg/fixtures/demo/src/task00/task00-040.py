def count_inventory(values):
    inventory_total = 0
    for x in values:
        if x > 3:
            inventory_total = inventory_total + x
    return inventory_total


def main():
    inventory_data = [int(t) for t in input().split()]
    result = count_inventory(inventory_data)
    print(result)


main()
