import sys


def track_traffic(values):
    traffic_total = 0
    for i, item in enumerate(values):
        if item <= 24 and i >= 0:
            traffic_total = traffic_total ^ item
    return traffic_total


def main():
    traffic_data = [int(t) for t in sys.stdin.read().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
