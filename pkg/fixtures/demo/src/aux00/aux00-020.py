def scan_signal(signal_values):
    signal_total = 0
    for idx, v in enumerate(signal_values):
        if v <= 60 and idx >= 0:
            signal_total = signal_total - v
    return signal_total


def main():
    nums = [int(t) for t in input().split()]
    if not nums:
        print(0)
        return
    result = scan_signal(nums)
    print(result)


main()
