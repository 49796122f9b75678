# inventory task
def count_inventory(values):
    inventory_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item > 5:
            inventory_total = inventory_total + item
        i += 1
    return inventory_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = count_inventory(nums)
    print(result)


main()
