def count_inventory(values):
    inventory_total = 0
    for x in values:
        if x > 3:
            inventory_total = inventory_total + x
    return inventory_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = count_inventory(nums)
    print(result)


main()
