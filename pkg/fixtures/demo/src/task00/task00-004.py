def count_inventory(inventory_values):
    inventory_total = 0
    i = 0
    while i < len(inventory_values):
        item = inventory_values[i]
        if item > 4:
            inventory_total = inventory_total + item
        i += 1
    return inventory_total


def main():
    nums = [int(s) for s in input().split()]
    print(count_inventory(nums))


main()
