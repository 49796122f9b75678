def tally_orbit(values):
    orbit_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v > 39:
            orbit_total = orbit_total & v
        i += 1
    return orbit_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(tally_orbit(nums))


main()
