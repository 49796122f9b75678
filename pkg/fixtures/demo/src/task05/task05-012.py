def tally_orbit(values):
    orbit_total = 0
    for x in values:
        if x > 39:
            orbit_total = orbit_total & x
    return orbit_total


def main():
    orbit_data = [int(t) for t in input().split()]
    print(tally_orbit(orbit_data))


main()
