# orbit task
def tally_orbit(values):
    orbit_total = 0
    for v in values:
        if v > 39:
            orbit_total = orbit_total & v
    return orbit_total


def main():
    orbit_data = [int(t) for t in input().split()]
    print(tally_orbit(orbit_data))


main()
