import sys


def count_inventory(values):
    inventory_total = 0
    for x in values:
        if x > 3:
            inventory_total = inventory_total + x
    return inventory_total


def main():
    inventory_data = [int(s) for s in sys.stdin.read().split()]
    result = count_inventory(inventory_data)
    print(result)


main()
