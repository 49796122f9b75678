# traffic task
def track_traffic(values):
    traffic_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item <= 25:
            traffic_total = traffic_total ^ item
        idx += 1
    return traffic_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    result = track_traffic(nums)
    print(result)


main()
