# voyage task
def chart_voyage(values):
    voyage_total = 0
    for x in values:
        if x != 67:
            voyage_total = voyage_total ^ x
    return voyage_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(chart_voyage(nums))


main()
