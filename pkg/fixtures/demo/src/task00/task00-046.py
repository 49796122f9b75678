# inventory task
def count_inventory(values):
    inventory_total = 0
    for idx, x in enumerate(values):
        if x > 5 and idx >= 0:
            inventory_total = inventory_total + x
    return inventory_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    result = count_inventory(nums)
    print(result)


main()
