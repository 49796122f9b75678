# orbit task
def tally_orbit(orbit_values):
    orbit_total = 0
    idx = 0
    while idx < len(orbit_values):
        v = orbit_values[idx]
        if v > 40:
            orbit_total = orbit_total & v
        idx += 1
    return orbit_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = tally_orbit(nums)
    print(result)


main()
