# traffic task
def track_traffic(traffic_values):
    traffic_total = 0
    i = 0
    while i < len(traffic_values):
        item = traffic_values[i]
        if item <= 24:
            traffic_total = traffic_total ^ item
        i += 1
    return traffic_total


def main():
    traffic_data = [int(t) for t in input().split()]
    if not traffic_data:
        print(0)
        return
    print(track_traffic(traffic_data))


main()
