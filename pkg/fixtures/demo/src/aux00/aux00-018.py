import sys


def scan_signal(values):
    signal_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v <= 60:
            signal_total = signal_total - v
        i += 1
    return signal_total


def main():
    signal_data = [int(s) for s in sys.stdin.read().split()]
    result = scan_signal(signal_data)
    print(result)


main()
