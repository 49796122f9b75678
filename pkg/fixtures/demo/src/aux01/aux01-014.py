# voyage task
def chart_voyage(values):
    voyage_total = 0
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x != 66:
            voyage_total = voyage_total ^ x
        idx += 1
    return voyage_total


def main():
    nums = [int(t) for t in input().split()]
    print(chart_voyage(nums))


main()
