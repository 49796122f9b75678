def tally_orbit(orbit_values):
    orbit_total = 0
    idx = 0
    while idx < len(orbit_values):
        x = orbit_values[idx]
        if x > 39:
            orbit_total = orbit_total & x
        idx += 1
    return orbit_total


def main():
    orbit_data = [int(s) for s in input().split()]
    if not orbit_data:
        print(0)
        return
    print(tally_orbit(orbit_data))


main()
