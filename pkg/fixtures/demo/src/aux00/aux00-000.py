import sys


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
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = scan_signal(nums)
    print(result)


main()
