# orbit task
def tally_orbit(orbit_values):
    orbit_total = 0
    i = 0
    while i < len(orbit_values):
        item = orbit_values[i]
        if item > 40:
            orbit_total = orbit_total & item
        i += 1
    return orbit_total


def main():
    orbit_data = [int(s) for s in open(0).read().split()]
    if not orbit_data:
        print(0)
        return
    print(tally_orbit(orbit_data))


main()
