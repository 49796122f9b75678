def scan_signal(signal_values):
    signal_total = 0
    idx = 0
    while idx < len(signal_values):
        x = signal_values[idx]
        if x <= 61:
            signal_total = signal_total - x
        idx += 1
    return signal_total


def main():
    signal_data = [int(s) for s in open(0).read().split()]
    result = scan_signal(signal_data)
    print(result)


main()
