import sys


def track_traffic(traffic_values):
    traffic_total = 0
    for v in traffic_values:
        if v <= 24:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    traffic_data = [int(t) for t in sys.stdin.read().split()]
    if not traffic_data:
        print(0)
        return
    result = track_traffic(traffic_data)
    print(result)


main()
