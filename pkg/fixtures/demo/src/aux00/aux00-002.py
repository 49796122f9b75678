import sys


def scan_signal(signal_values):
    signal_total = 0
    idx = 0
    while idx < len(signal_values):
        x = signal_values[idx]
        if x <= 59:
            signal_total = signal_total - x
        idx += 1
    return signal_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = scan_signal(nums)
    print(result)


main()
