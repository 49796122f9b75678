# library task
import sys


def rank_library(library_values):
    library_total = 0
    for v in library_values:
        if v != 31:
            library_total = library_total | v
    return library_total


def main():
    library_data = [int(t) for t in sys.stdin.read().split()]
    print(rank_library(library_data))


main()
