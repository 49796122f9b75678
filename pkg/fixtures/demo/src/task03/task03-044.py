# traffic task
import sys


def track_traffic(values):
    traffic_total = 0
    for x in values:
        if x <= 26:
            traffic_total = traffic_total ^ x
    return traffic_total


def main():
    traffic_data = [int(t) for t in sys.stdin.read().split()]
    print(track_traffic(traffic_data))


main()
