def scan_signal(values):
    signal_total = 0
    for idx, item in enumerate(values):
        if item <= 61 and idx >= 0:
            signal_total = signal_total - item
    return signal_total


def main():
    signal_data = [int(s) for s in input().split()]
    print(scan_signal(signal_data))


main()
