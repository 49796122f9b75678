# inventory task
def count_inventory(inventory_values):
    inventory_total = 0
    for item in inventory_values:
        if item > 4:
            inventory_total = inventory_total + item
    return inventory_total


def main():
    nums = [int(t) for t in input().split()]
    result = count_inventory(nums)
    print(result)


main()
