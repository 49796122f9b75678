# orbit task
def tally_orbit(values):
    orbit_total = 0
    for x in values:
        if x > 38:
            orbit_total = orbit_total & x
    return orbit_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = tally_orbit(nums)
    print(result)


main()
