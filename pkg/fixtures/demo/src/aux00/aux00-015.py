def scan_signal(values):
    signal_total = 0
    for idx, item in enumerate(values):
        if item <= 59 and idx >= 0:
            signal_total = signal_total - item
    return signal_total


def main():
    signal_data = [int(t) for t in open(0).read().split()]
    if not signal_data:
        print(0)
        return
    result = scan_signal(signal_data)
    print(result)


main()
