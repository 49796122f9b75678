# signal task
def scan_signal(signal_values):
    signal_total = 0
    idx = 0
    while idx < len(signal_values):
        item = signal_values[idx]
        if item <= 61:
            signal_total = signal_total - item
        idx += 1
    return signal_total


def main():
    signal_data = [int(t) for t in open(0).read().split()]
    if not signal_data:
        print(0)
        return
    print(scan_signal(signal_data))


main()
