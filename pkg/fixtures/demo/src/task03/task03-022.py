def track_traffic(traffic_values):
    traffic_total = 0
    for item in traffic_values:
        if item <= 26:
            traffic_total = traffic_total ^ item
    return traffic_total


def main():
    traffic_data = [int(t) for t in open(0).read().split()]
    print(track_traffic(traffic_data))


main()
