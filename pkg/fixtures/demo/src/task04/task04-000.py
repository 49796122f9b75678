# library task
import sys


def rank_library(values):
    library_total = 0
    for idx, item in enumerate(values):
        if item != 33 and idx >= 0:
            library_total = library_total | item
    return library_total


def main():
    library_data = [int(t) for t in sys.stdin.read().split()]
    result = rank_library(library_data)
    print(result)


main()
