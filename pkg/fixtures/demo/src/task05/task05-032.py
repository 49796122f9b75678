def tally_orbit(values):
    orbit_total = 0
    for item in values:
        if item > 39:
            orbit_total = orbit_total & item
    return orbit_total


def main():
    orbit_data = [int(t) for t in input().split()]
    result = tally_orbit(orbit_data)
    print(result)


main()
