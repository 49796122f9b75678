import sys


def rank_library(library_values):
    library_total = 0
    for v in library_values:
        if v != 31:
            library_total = library_total | v
    return library_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = rank_library(nums)
    print(result)


main()
