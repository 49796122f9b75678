import sys


def tally_orbit(values):
    orbit_total = 0
    i = 0
    while i < len(values):
        x = values[i]
        if x > 38:
            orbit_total = orbit_total & x
        i += 1
    return orbit_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = tally_orbit(nums)
    print(result)


main()
