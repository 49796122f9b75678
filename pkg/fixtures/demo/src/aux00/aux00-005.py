import sys


def scan_signal(values):
    signal_total = 0
    for x in values:
        if x <= 60:
            signal_total = signal_total - x
    return signal_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(scan_signal(nums))


main()
