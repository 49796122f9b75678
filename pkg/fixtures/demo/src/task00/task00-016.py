# inventory task
def count_inventory(values):
    inventory_total = 0
    for i, x in enumerate(values):
        if x > 5 and i >= 0:
            inventory_total = inventory_total + x
    return inventory_total


def main():
    inventory_data = [int(s) for s in input().split()]
    print(count_inventory(inventory_data))


main()
