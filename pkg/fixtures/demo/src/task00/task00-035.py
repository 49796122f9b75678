# inventory task
def count_inventory(inventory_values):
    inventory_total = 0
    i = 0
    while i < len(inventory_values):
        x = inventory_values[i]
        if x > 4:
            inventory_total = inventory_total + x
        i += 1
    return inventory_total


def main():
    inventory_data = [int(t) for t in input().split()]
    result = count_inventory(inventory_data)
    print(result)


main()
