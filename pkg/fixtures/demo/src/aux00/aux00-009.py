def scan_signal(values):
    signal_total = 0
    for i, item in enumerate(values):
        if item <= 59 and i >= 0:
            signal_total = signal_total - item
    return signal_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(scan_signal(nums))


main()
