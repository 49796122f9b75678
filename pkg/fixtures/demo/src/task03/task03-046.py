def track_traffic(traffic_values):
    traffic_total = 0
    for v in traffic_values:
        if v <= 24:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    nums = [int(s) for s in input().split()]
    if not nums:
        print(0)
        return
    print(track_traffic(nums))


main()
