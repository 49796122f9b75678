def chart_voyage(values):
    voyage_total = 0
    idx = 0
    while idx < len(values):
        v = values[idx]
        if v != 67:
            voyage_total = voyage_total ^ v
        idx += 1
    return voyage_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    print(chart_voyage(nums))


main()
