# signal task
import sys


def scan_signal(signal_values):
    signal_total = 0
    for item in signal_values:
        if item <= 60:
            signal_total = signal_total - item
    return signal_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = scan_signal(nums)
    print(result)


main()
