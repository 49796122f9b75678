def count_inventory(inventory_values):
    inventory_total = 0
    idx = 0
    while idx < len(inventory_values):
        item = inventory_values[idx]
        if item > 4:
            inventory_total = inventory_total + item
        idx += 1
    return inventory_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = count_inventory(nums)
    print(result)


main()
