import sys


def tally_orbit(values):
    orbit_total = 0
    for v in values:
        if v > 39:
            orbit_total = orbit_total & v
    return orbit_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = tally_orbit(nums)
    print(result)


main()
