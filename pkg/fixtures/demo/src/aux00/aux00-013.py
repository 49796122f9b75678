def scan_signal(signal_values):
    signal_total = 0
    i = 0
    while i < len(signal_values):
        item = signal_values[i]
        if item <= 60:
            signal_total = signal_total - item
        i += 1
    return signal_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    if not nums:
        print(0)
        return
    result = scan_signal(nums)
    print(result)


main()
