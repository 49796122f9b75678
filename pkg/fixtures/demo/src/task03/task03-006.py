def track_traffic(values):
    traffic_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v <= 24:
            traffic_total = traffic_total ^ v
        i += 1
    return traffic_total


def main():
    traffic_data = [int(s) for s in input().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
