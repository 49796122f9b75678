def track_traffic(traffic_values):
    traffic_total = 0
    for i, x in enumerate(traffic_values):
        if x <= 26 and i >= 0:
            traffic_total = traffic_total ^ x
    return traffic_total


def main():
    nums = [int(t) for t in input().split()]
    print(track_traffic(nums))


main()
