# inventory task
def count_inventory(values):
    inventory_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v > 4:
            inventory_total = inventory_total + v
        i += 1
    return inventory_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = count_inventory(nums)
    print(result)


main()
