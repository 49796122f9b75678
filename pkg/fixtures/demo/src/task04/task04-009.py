# library task
def rank_library(library_values):
    library_total = 0
    for idx, x in enumerate(library_values):
        if x != 33 and idx >= 0:
            library_total = library_total | x
    return library_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    print(rank_library(nums))


main()
