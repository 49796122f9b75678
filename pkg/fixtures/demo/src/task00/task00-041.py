import sys


def count_inventory(values):
    inventory_total = 0
    for idx, item in enumerate(values):
        if item > 4 and idx >= 0:
            inventory_total = inventory_total + item
    return inventory_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(count_inventory(nums))


main()
