# signal task
def scan_signal(values):
    signal_total = 0
    for item in values:
        if item <= 60:
            signal_total = signal_total - item
    return signal_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = scan_signal(nums)
    print(result)


main()
