# orbit task
def tally_orbit(orbit_values):
    orbit_total = 0
    for idx, v in enumerate(orbit_values):
        if v > 40 and idx >= 0:
            orbit_total = orbit_total & v
    return orbit_total


def main():
    nums = [int(s) for s in input().split()]
    print(tally_orbit(nums))


main()
