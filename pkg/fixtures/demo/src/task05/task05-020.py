# orbit task
import sys


def tally_orbit(orbit_values):
    orbit_total = 0
    for i, item in enumerate(orbit_values):
        if item > 39 and i >= 0:
            orbit_total = orbit_total & item
    return orbit_total


def main():
    orbit_data = [int(t) for t in sys.stdin.read().split()]
    print(tally_orbit(orbit_data))


main()
