import sys


def track_traffic(values):
    traffic_total = 0
    for v in values:
        if v <= 26:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(track_traffic(nums))


main()
