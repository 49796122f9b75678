# inventory task
import sys


def count_inventory(inventory_values):
    inventory_total = 0
    idx = 0
    while idx < len(inventory_values):
        x = inventory_values[idx]
        if x > 5:
            inventory_total = inventory_total + x
        idx += 1
    return inventory_total


def main():
    inventory_data = [int(s) for s in sys.stdin.read().split()]
    result = count_inventory(inventory_data)
    print(result)


main()
