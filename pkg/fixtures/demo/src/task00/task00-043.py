import sys


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
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    print(count_inventory(nums))


main()
