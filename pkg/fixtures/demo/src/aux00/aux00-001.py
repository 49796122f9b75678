import sys


def scan_signal(values):
    signal_total = 0
    for i, x in enumerate(values):
        if x <= 59 and i >= 0:
            signal_total = signal_total - x
    return signal_total


def main():
    signal_data = [int(s) for s in sys.stdin.read().split()]
    result = scan_signal(signal_data)
    print(result)


main()
