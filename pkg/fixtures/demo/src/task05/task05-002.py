def tally_orbit(values):
    orbit_total = 0
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item > 40:
            orbit_total = orbit_total & item
        idx += 1
    return orbit_total


def main():
    orbit_data = [int(s) for s in open(0).read().split()]
    print(tally_orbit(orbit_data))


main()
