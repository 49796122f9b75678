def count_inventory(inventory_values):
    inventory_total = 0
    idx = 0
    while idx < len(inventory_values):
        v = inventory_values[idx]
        if v > 4:
            inventory_total = inventory_total + v
        idx += 1
    return inventory_total


def main():
    nums = [int(t) for t in input().split()]
    print(count_inventory(nums))


main()
