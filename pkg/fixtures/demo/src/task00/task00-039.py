def count_inventory(values):
    inventory_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item > 4:
            inventory_total = inventory_total + item
        i += 1
    return inventory_total


def main():
    inventory_data = [int(t) for t in input().split()]
    result = count_inventory(inventory_data)
    print(result)


main()
