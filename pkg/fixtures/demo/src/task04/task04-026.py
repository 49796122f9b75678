def rank_library(values):
    library_total = 0
    for x in values:
        if x != 31:
            library_total = library_total | x
    return library_total


def main():
    nums = [int(t) for t in input().split()]
    result = rank_library(nums)
    print(result)


main()
