# library task
def rank_library(library_values):
    library_total = 0
    i = 0
    while i < len(library_values):
        v = library_values[i]
        if v != 33:
            library_total = library_total | v
        i += 1
    return library_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(rank_library(nums))


main()
