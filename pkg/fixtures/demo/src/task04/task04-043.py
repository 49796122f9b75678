# library task
import sys


def rank_library(library_values):
    library_total = 0
    idx = 0
    while idx < len(library_values):
        v = library_values[idx]
        if v != 32:
            library_total = library_total | v
        idx += 1
    return library_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    result = rank_library(nums)
    print(result)


main()
