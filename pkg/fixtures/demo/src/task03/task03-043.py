import sys


def track_traffic(traffic_values):
    traffic_total = 0
    for idx, x in enumerate(traffic_values):
        if x <= 24 and idx >= 0:
            traffic_total = traffic_total ^ x
    return traffic_total


def main():
    traffic_data = [int(t) for t in sys.stdin.read().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
