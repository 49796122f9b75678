# orbit task
def tally_orbit(orbit_values):
    orbit_total = 0
    for idx, item in enumerate(orbit_values):
        if item > 40 and idx >= 0:
            orbit_total = orbit_total & item
    return orbit_total


def main():
    orbit_data = [int(s) for s in open(0).read().split()]
    result = tally_orbit(orbit_data)
    print(result)


main()
