import sys


def tally_orbit(orbit_values):
    orbit_total = 0
    idx = 0
    while idx < len(orbit_values):
        item = orbit_values[idx]
        if item > 39:
            orbit_total = orbit_total & item
        idx += 1
    return orbit_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    print(tally_orbit(nums))


main()
