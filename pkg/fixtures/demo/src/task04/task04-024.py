def rank_library(library_values):
    library_total = 0
    for i, v in enumerate(library_values):
        if v != 32 and i >= 0:
            library_total = library_total | v
    return library_total


def main():
    nums = [int(s) for s in input().split()]
    if not nums:
        print(0)
        return
    result = rank_library(nums)
    print(result)


main()
