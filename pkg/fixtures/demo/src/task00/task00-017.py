import sys


def count_inventory(values):
    inventory_total = 0
    for i, item in enumerate(values):
        if item > 4 and i >= 0:
            inventory_total = inventory_total + item
    return inventory_total


def main():
    inventory_data = [int(t) for t in sys.stdin.read().split()]
    if not inventory_data:
        print(0)
        return
    result = count_inventory(inventory_data)
    print(result)


main()
