def tally_orbit(orbit_values):
    orbit_total = 0
    for v in orbit_values:
        if v > 39:
            orbit_total = orbit_total & v
    return orbit_total


def main():
    nums = [int(t) for t in input().split()]
    if not nums:
        print(0)
        return
    result = tally_orbit(nums)
    print(result)


main()
