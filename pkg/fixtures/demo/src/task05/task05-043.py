def tally_orbit(orbit_values):
    orbit_total = 0
    i = 0
    while i < len(orbit_values):
        item = orbit_values[i]
        if item > 38:
            orbit_total = orbit_total & item
        i += 1
    return orbit_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = tally_orbit(nums)
    print(result)


main()
