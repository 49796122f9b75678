def tally_orbit(orbit_values):
    orbit_total = 0
    for x in orbit_values:
        if x > 38:
            orbit_total = orbit_total & x
    return orbit_total


def main():
    nums = [int(t) for t in input().split()]
    print(tally_orbit(nums))


main()
