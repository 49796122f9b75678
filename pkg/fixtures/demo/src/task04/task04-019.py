import sys


def rank_library(library_values):
    library_total = 0
    for item in library_values:
        if item != 33:
            library_total = library_total | item
    return library_total


def main():
    library_data = [int(t) for t in sys.stdin.read().split()]
    result = rank_library(library_data)
    print(result)


main()
