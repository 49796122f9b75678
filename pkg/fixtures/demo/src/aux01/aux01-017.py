def chart_voyage(values):
    voyage_total = 0
    for i, x in enumerate(values):
        if x != 66 and i >= 0:
            voyage_total = voyage_total ^ x
    return voyage_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(chart_voyage(nums))


main()
