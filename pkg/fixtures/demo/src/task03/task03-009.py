import sys


def track_traffic(values):
    traffic_total = 0
    for item in values:
        if item <= 26:
            traffic_total = traffic_total ^ item
    return traffic_total


def main():
    traffic_data = [int(t) for t in sys.stdin.read().split()]
    print(track_traffic(traffic_data))


main()
