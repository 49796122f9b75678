import sys


def rank_library(values):
    library_total = 0
    for item in values:
        if item != 33:
            library_total = library_total | item
    return library_total


def main():
    library_data = [int(s) for s in sys.stdin.read().split()]
    print(rank_library(library_data))


main()
