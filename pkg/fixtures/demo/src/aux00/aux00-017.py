import sys


def scan_signal(values):
    signal_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item <= 61:
            signal_total = signal_total - item
        i += 1
    return signal_total


def main():
    signal_data = [int(t) for t in sys.stdin.read().split()]
    result = scan_signal(signal_data)
    print(result)


main()
