def track_traffic(traffic_values):
    traffic_total = 0
    for idx, x in enumerate(traffic_values):
        if x <= 26 and idx >= 0:
            traffic_total = traffic_total ^ x
    return traffic_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    if not nums:
        print(0)
        return
    result = track_traffic(nums)
    print(result)


main()
