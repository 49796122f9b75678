# traffic task
import sys


def track_traffic(traffic_values):
    traffic_total = 0
    idx = 0
    while idx < len(traffic_values):
        v = traffic_values[idx]
        if v <= 24:
            traffic_total = traffic_total ^ v
        idx += 1
    return traffic_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    print(track_traffic(nums))


main()
