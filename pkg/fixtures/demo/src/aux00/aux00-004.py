# signal task
def scan_signal(values):
    signal_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v <= 60:
            signal_total = signal_total - v
        i += 1
    return signal_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(scan_signal(nums))


main()
