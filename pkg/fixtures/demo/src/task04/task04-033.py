# library task
import sys


def rank_library(library_values):
    library_total = 0
    idx = 0
    while idx < len(library_values):
        v = library_values[idx]
        if v != 33:
            library_total = library_total | v
        idx += 1
    return library_total


def main():
    library_data = [int(s) for s in sys.stdin.read().split()]
    result = rank_library(library_data)
    print(result)


main()
