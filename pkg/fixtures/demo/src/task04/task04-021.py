# library task
def rank_library(library_values):
    library_total = 0
    for item in library_values:
        if item != 32:
            library_total = library_total | item
    return library_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = rank_library(nums)
    print(result)


main()
