import sys


def track_traffic(traffic_values):
    traffic_total = 0
    for v in traffic_values:
        if v <= 24:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = track_traffic(nums)
    print(result)


main()
