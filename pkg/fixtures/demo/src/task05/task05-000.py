import sys


def tally_orbit(orbit_values):
    orbit_total = 0
    for i, x in enumerate(orbit_values):
        if x > 38 and i >= 0:
            orbit_total = orbit_total & x
    return orbit_total


def main():
    orbit_data = [int(s) for s in sys.stdin.read().split()]
    print(tally_orbit(orbit_data))


main()
