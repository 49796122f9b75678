# inventory task
def count_inventory(values):
    inventory_total = 0
    for item in values:
        if item > 5:
            inventory_total = inventory_total + item
    return inventory_total


def main():
    inventory_data = [int(t) for t in input().split()]
    result = count_inventory(inventory_data)
    print(result)


main()
