# library task
import sys


def rank_library(library_values):
    library_total = 0
    for x in library_values:
        if x != 33:
            library_total = library_total | x
    return library_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    result = rank_library(nums)
    print(result)


main()
