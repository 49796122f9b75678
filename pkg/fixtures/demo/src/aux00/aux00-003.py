def scan_signal(signal_values):
    signal_total = 0
    for item in signal_values:
        if item <= 60:
            signal_total = signal_total - item
    return signal_total


def main():
    signal_data = [int(s) for s in input().split()]
    print(scan_signal(signal_data))


main()
