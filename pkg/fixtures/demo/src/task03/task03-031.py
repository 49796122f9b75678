import sys


def track_traffic(values):
    traffic_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item <= 26:
            traffic_total = traffic_total ^ item
        idx += 1
    return traffic_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(track_traffic(nums))


main()
