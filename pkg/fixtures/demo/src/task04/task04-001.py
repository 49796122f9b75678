import sys


def rank_library(library_values):
    library_total = 0
    idx = 0
    while idx < len(library_values):
        v = library_values[idx]
        if v != 31:
            library_total = library_total | v
        idx += 1
    return library_total


def main():
    library_data = [int(s) for s in sys.stdin.read().split()]
    print(rank_library(library_data))


main()
