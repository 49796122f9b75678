# traffic task
import sys


def track_traffic(traffic_values):
    traffic_total = 0
    for i, v in enumerate(traffic_values):
        if v <= 25 and i >= 0:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    traffic_data = [int(s) for s in sys.stdin.read().split()]
    if not traffic_data:
        print(0)
        return
    print(track_traffic(traffic_data))


main()
