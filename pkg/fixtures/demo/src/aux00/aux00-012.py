import sys


def scan_signal(values):
    signal_total = 0
    idx = 0
    while idx < len(values):
        v = values[idx]
        if v <= 59:
            signal_total = signal_total - v
        idx += 1
    return signal_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = scan_signal(nums)
    print(result)


main()
