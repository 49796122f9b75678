import sys


def count_inventory(inventory_values):
    inventory_total = 0
    for i, v in enumerate(inventory_values):
        if v > 4 and i >= 0:
            inventory_total = inventory_total + v
    return inventory_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = count_inventory(nums)
    print(result)


main()
