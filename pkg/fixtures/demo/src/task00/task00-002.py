# inventory task
def count_inventory(inventory_values):
    inventory_total = 0
    idx = 0
    while idx < len(inventory_values):
        v = inventory_values[idx]
        if v > 3:
            inventory_total = inventory_total + v
        idx += 1
    return inventory_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(count_inventory(nums))


main()
