def tally_orbit(values):
    orbit_total = 0
    i = 0
    while i < len(values):
        item = values[i]
        if item > 39:
            orbit_total = orbit_total & item
        i += 1
    return orbit_total


def main():
    orbit_data = [int(t) for t in open(0).read().split()]
    result = tally_orbit(orbit_data)
    print(result)


main()
