def track_traffic(values):
    traffic_total = 0
    for i, v in enumerate(values):
        if v <= 24 and i >= 0:
            traffic_total = traffic_total ^ v
    return traffic_total


def main():
    traffic_data = [int(t) for t in input().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
