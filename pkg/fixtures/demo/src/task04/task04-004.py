def rank_library(library_values):
    library_total = 0
    for x in library_values:
        if x != 33:
            library_total = library_total | x
    return library_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(rank_library(nums))


main()
