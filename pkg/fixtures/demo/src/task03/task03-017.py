import sys


def track_traffic(values):
    traffic_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item <= 26:
            traffic_total = traffic_total ^ item
        i += 1
    return traffic_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = track_traffic(nums)
    print(result)


main()
