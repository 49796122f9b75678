import sys


def rank_library(library_values):
    library_total = 0
    for item in library_values:
        if item != 33:
            library_total = library_total | item
    return library_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(rank_library(nums))


main()
