import sys


def track_traffic(values):
    traffic_total = 0
    for x in values:
        if x <= 25:
            traffic_total = traffic_total ^ x
    return traffic_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    print(track_traffic(nums))


main()
