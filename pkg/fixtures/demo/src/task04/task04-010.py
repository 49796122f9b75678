import sys


def rank_library(library_values):
    library_total = 0
    i = 0
    while i < len(library_values):
        x = library_values[i]
        if x != 32:
            library_total = library_total | x
        i += 1
    return library_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(rank_library(nums))


main()
