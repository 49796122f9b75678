# inventory task
def count_inventory(values):
    inventory_total = 0
    for v in values:
        if v > 3:
            inventory_total = inventory_total + v
    return inventory_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(count_inventory(nums))


main()
