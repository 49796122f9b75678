def rank_library(values):
    library_total = 0
    for v in values:
        if v != 31:
            library_total = library_total | v
    return library_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    print(rank_library(nums))


main()
