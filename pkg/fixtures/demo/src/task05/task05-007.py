# orbit task
def tally_orbit(orbit_values):
    orbit_total = 0
    for item in orbit_values:
        if item > 39:
            orbit_total = orbit_total & item
    return orbit_total


def main():
    orbit_data = [int(t) for t in open(0).read().split()]
    print(tally_orbit(orbit_data))


main()
