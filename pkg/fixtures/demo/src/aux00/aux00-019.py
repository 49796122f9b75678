# signal task
import sys


def scan_signal(values):
    signal_total = 0
    for i, v in enumerate(values):
        if v <= 61 and i >= 0:
            signal_total = signal_total - v
    return signal_total


def main():
    signal_data = [int(t) for t in sys.stdin.read().split()]
    result = scan_signal(signal_data)
    print(result)


main()
