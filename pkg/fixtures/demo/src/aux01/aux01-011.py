def chart_voyage(values):
    voyage_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item != 68:
            voyage_total = voyage_total ^ item
        idx += 1
    return voyage_total


def main():
    nums = [int(t) for t in input().split()]
    if not nums:
        print(0)
        return
    print(chart_voyage(nums))


main()
