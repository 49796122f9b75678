def count_inventory(values):
    inventory_total = 0
    for item in values:
        if item > 5:
            inventory_total = inventory_total + item
    return inventory_total


def main():
    nums = [int(s) for s in input().split()]
    if not nums:
        print(0)
        return
    print(count_inventory(nums))


main()
