# inventory task
import sys


def count_inventory(inventory_values):
    inventory_total = 0
    i = 0
    while i < len(inventory_values):
        v = inventory_values[i]
        if v > 4:
            inventory_total = inventory_total + v
        i += 1
    return inventory_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(count_inventory(nums))


main()
