def scan_signal(values):
    signal_total = 0
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x <= 60:
            signal_total = signal_total - x
        idx += 1
    return signal_total


def main():
    signal_data = [int(t) for t in open(0).read().split()]
    if not signal_data:
        print(0)
        return
    result = scan_signal(signal_data)
    print(result)


main()
