import sys


def rank_library(values):
    library_total = 0
    i = 0
    while i < len(values):
        v = values[i]
        if v != 32:
            library_total = library_total | v
        i += 1
    return library_total


def main():
    library_data = [int(s) for s in sys.stdin.read().split()]
    print(rank_library(library_data))


main()
