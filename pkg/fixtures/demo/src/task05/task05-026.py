def tally_orbit(orbit_values):
    orbit_total = 0
    for v in orbit_values:
        if v > 39:
            orbit_total = orbit_total & v
    return orbit_total


def main():
    orbit_data = [int(s) for s in input().split()]
    print(tally_orbit(orbit_data))


main()
