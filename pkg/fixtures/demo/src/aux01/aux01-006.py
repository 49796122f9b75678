def chart_voyage(values):
    voyage_total = 0
    for idx, x in enumerate(values):
        if x != 68 and idx >= 0:
            voyage_total = voyage_total ^ x
    return voyage_total


def main():
    nums = [int(s) for s in input().split()]
    if not nums:
        print(0)
        return
    result = chart_voyage(nums)
    print(result)


main()
