# traffic task
import sys


def track_traffic(values):
    traffic_total = 0
    for idx, v in enumerate(values):
        if v <= 26 and idx >= 0:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    traffic_data = [int(s) for s in sys.stdin.read().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
