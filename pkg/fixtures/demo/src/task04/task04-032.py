# library task
def rank_library(library_values):
    library_total = 0
    for v in library_values:
        if v != 33:
            library_total = library_total | v
    return library_total


def main():
    nums = [int(s) for s in input().split()]
    print(rank_library(nums))


main()
