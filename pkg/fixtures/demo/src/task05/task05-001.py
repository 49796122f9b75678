import sys


def tally_orbit(orbit_values):
    orbit_total = 0
    for x in orbit_values:
        if x > 38:
            orbit_total = orbit_total & x
    return orbit_total


def main():
    orbit_data = [int(t) for t in sys.stdin.read().split()]
    result = tally_orbit(orbit_data)
    print(result)


main()
