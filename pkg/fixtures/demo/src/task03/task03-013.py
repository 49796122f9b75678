# traffic task
import sys


def track_traffic(traffic_values):
    traffic_total = 0
    for idx, item in enumerate(traffic_values):
        if item <= 25 and idx >= 0:
            traffic_total = traffic_total ^ item
    return traffic_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    result = track_traffic(nums)
    print(result)


main()
