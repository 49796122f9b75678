# traffic task
def track_traffic(values):
    traffic_total = 0
    for idx, x in enumerate(values):
        if x <= 24 and idx >= 0:
            traffic_total = traffic_total ^ x
    return traffic_total


def main():
    traffic_data = [int(t) for t in open(0).read().split()]
    result = track_traffic(traffic_data)
    print(result)


main()
