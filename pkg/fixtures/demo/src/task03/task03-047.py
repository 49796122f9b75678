# traffic task
def track_traffic(traffic_values):
    traffic_total = 0
    for item in traffic_values:
        if item <= 26:
            traffic_total = traffic_total ^ item
    return traffic_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(track_traffic(nums))


main()
