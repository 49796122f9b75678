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
    nums = [int(t) for t in open(0).read().split()]
    result = count_inventory(nums)
    print(result)


main()
