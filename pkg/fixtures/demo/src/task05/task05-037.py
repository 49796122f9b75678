def tally_orbit(values):
    orbit_total = 0
    for x in values:
        if x > 40:
            orbit_total = orbit_total & x
    return orbit_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(tally_orbit(nums))


main()
