# orbit task
import sys


def tally_orbit(values):
    orbit_total = 0
    for v in values:
        if v > 40:
            orbit_total = orbit_total & v
    return orbit_total


def main():
    orbit_data = [int(s) for s in sys.stdin.read().split()]
    if not orbit_data:
        print(0)
        return
    result = tally_orbit(orbit_data)
    print(result)


main()
