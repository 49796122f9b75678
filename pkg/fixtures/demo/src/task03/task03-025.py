# traffic task
def track_traffic(traffic_values):
    traffic_total = 0
    i = 0
    while i < len(traffic_values):
        v = traffic_values[i]
        if v <= 25:
            traffic_total = traffic_total ^ v
        i += 1
    return traffic_total


def main():
    traffic_data = [int(s) for s in input().split()]
    if not traffic_data:
        print(0)
        return
    print(track_traffic(traffic_data))


main()
