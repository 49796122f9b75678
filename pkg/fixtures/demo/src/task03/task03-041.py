# traffic task
import sys


def track_traffic(traffic_values):
    traffic_total = 0
    for v in traffic_values:
        if v <= 26:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    traffic_data = [int(s) for s in sys.stdin.read().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
