def track_traffic(values):
    traffic_total = 0
    idx = 0
    while idx < len(values):
        v = values[idx]
        if v <= 26:
            traffic_total = traffic_total ^ v
        idx += 1
    return traffic_total


def main():
    traffic_data = [int(t) for t in open(0).read().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
