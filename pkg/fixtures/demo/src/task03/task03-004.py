def track_traffic(values):
    traffic_total = 0
    for v in values:
        if v <= 25:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(track_traffic(nums))


main()
